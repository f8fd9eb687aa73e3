#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polycat/functor.hpp"
#include "polycat/lax_functor.hpp"
#include "polycat/polycategory.hpp"

namespace polycat {

MonoidPresentation cyclic_group(std::size_t n);  // "Z/n", elements "0".."n-1"
MonoidPresentation bool_monoid();                // ({0,1}, and, 1)
MonoidPresentation klein_group();                // Z/2 x Z/2, elements "00".."11"

// Only the identities.
std::shared_ptr<TablePolycategory> identities_only(const ObjectList& objects, std::size_t bound);

// One object, unary polymaps labelled by the monoid, nothing else.
std::shared_ptr<TablePolycategory> unary_monoid(const MonoidPresentation& m);

struct GradedColour {
  ObjectId name;
  long degree = 0;
};

// Polymaps Γ -> Δ exist exactly when the degrees of Δ and Γ have equal sums
// modulo the modulus (0 means the integers), one per monoid element;
// composition multiplies labels.
struct GradedPresentation {
  std::string name;
  std::vector<GradedColour> colours;
  long modulus = 0;
  MonoidPresentation monoid;
  std::size_t bound = 2;
};

std::shared_ptr<TablePolycategory> graded_polycat(const GradedPresentation& g);

// Relabels colours and labels; the maps must send balanced boundaries to
// balanced ones and be multiplicative (checked by check_functor, not here).
PolyFunctor relabel_functor(std::string name, PolycatPtr source, PolycatPtr target,
                            std::map<ObjectId, ObjectId> colours, std::map<std::string, std::string> labels);

// The Boolean monoid polycategory collapsed onto the terminal one.
PolyFunctor bool_to_terminal(std::size_t bound);

// A presheaf on a one-object category: x . m is action[x][m], a right action.
// F(m)(y ; x) is a singleton exactly when y . m = x.
struct MonoidAction {
  MonoidPresentation monoid;
  std::vector<std::string> set;
  std::vector<std::vector<std::string>> action;
};
MonoidAction bool_action();
LaxNormalFunctor action_functor(const MonoidAction& a);

struct GradedCase {
  std::string description;
  std::shared_ptr<TablePolycategory> total;
  PolycatPtr base;
  std::shared_ptr<PolyFunctor> projection;
  LaxNormalFunctor functor;  // fibres functor of the projection
};

// Colours a (degree 0) and b (degree 1) over the terminal base, integer
// degrees, trivial labels: no map a,... -> ... can absorb a lone b.
GradedCase nonrepresentable_case();
// Colours a, b with degrees mod 2 and labels in Z/2 over the terminal base.
GradedCase representable_terminal_case();
// Base of at most 2 colours, fibres of at most 3 colours, label fibres of at
// most 3 elements. With representable, degrees and labels are chosen so every
// distributor is representable in every variable.
GradedCase random_graded_case(std::uint64_t seed, bool representable);

}  // namespace polycat
