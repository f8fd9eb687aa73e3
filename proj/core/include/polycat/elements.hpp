#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycat/axioms.hpp"
#include "polycat/fibration.hpp"
#include "polycat/functor.hpp"
#include "polycat/lax_functor.hpp"

namespace polycat {

struct ElementsConstruction {
  std::shared_ptr<TablePolycategory> total;
  std::shared_ptr<PolyFunctor> projection;
  AxiomReport axioms;
  FunctorReport functor;
  // Polymap of the total polycategory -> (base polymap, element of its distributor).
  std::map<PolyMap, std::pair<PolyMap, std::size_t>> origin;
};

// Objects "(A,R)", polymaps "(f,x)" with x an element of F(f), identities
// through the normality isos and composition through mu. Throws
// InvariantError when F fails check_lax_normal or the result fails its
// axiom or functor check.
ElementsConstruction build_elements(const LaxNormalFunctor& f);

// The fibres functor of the projection of build_elements(F), compared with F
// through the canonical bijections on fibres, elements, normality and mu.
ElementCheckReport roundtrip_check(const LaxNormalFunctor& f);
// build_elements(fibres_functor(p)) compared with the source of p over the base.
ElementCheckReport roundtrip_check(const PolyFunctor& p);

struct MvarEntry {
  PolyMap polymap;
  Position variable;
  bool representable = false;
  std::string unrepresented;  // the fixing with no representing object
};

struct MvarReport {
  std::string functor;
  std::vector<MvarEntry> entries;
  std::size_t composites_checked = 0;
  std::vector<std::string> pseudo_failures;  // mu not bijective on coend classes

  bool representable_everywhere() const;
  bool pseudo() const { return pseudo_failures.empty(); }
  bool holds() const { return representable_everywhere() && pseudo(); }
  std::vector<std::string> lines() const;
};

// Representability of every distributor in every variable, and invertibility
// of every laxity component.
MvarReport mvar_check(const LaxNormalFunctor& f);

struct GrothendieckReport {
  MvarReport mvar;
  BifibrationDecision bifib;
  std::optional<BirepDecision> birep;  // when the base is terminal
  bool missing_matches = true;         // the first missing lift is a failing variable

  bool agree() const;
  std::vector<std::string> lines() const;
};

GrothendieckReport grothendieck_crosscheck(const LaxNormalFunctor& f);

// One object and exactly one polymap per in-scope boundary.
bool is_terminal(const FinPolycategory& p);

}  // namespace polycat
