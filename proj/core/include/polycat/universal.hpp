#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polycat/polycategory.hpp"
#include "polycat/scope.hpp"

namespace polycat {

enum class Side { In, Out };

struct Position {
  Side side = Side::Out;
  std::size_t index = 0;

  auto operator<=>(const Position&) const = default;
};

std::string to_string(const Position& p);
Position parse_position(const std::string& text);  // "out:0" or "in:1"

struct FactorizationFailure {
  PolyMap h;
  std::size_t split = 0;           // where the universal map's side sits inside h
  std::size_t factorizations = 0;  // 0 = missing, >1 = not unique
};

struct UniversalityCertificate {
  PolyMap polymap;
  Position position;
  std::size_t bound = 0;
  bool bound_relative = false;
  std::size_t checked_instances = 0;
  std::size_t skipped_out_of_bound = 0;
  std::optional<FactorizationFailure> failure;

  bool universal() const { return !failure.has_value(); }
  std::vector<std::string> lines() const;
};

// Instances whose factorization would leave the arity bound are skipped and
// counted; the certificate is then bound-relative.
UniversalityCertificate is_out_universal(const Scope& s, std::size_t u, std::size_t i);
UniversalityCertificate is_in_universal(const Scope& s, std::size_t n, std::size_t j);
UniversalityCertificate is_out_universal(const FinPolycategory& p, const PolyMap& u, std::size_t i);
UniversalityCertificate is_in_universal(const FinPolycategory& p, const PolyMap& n, std::size_t j);
UniversalityCertificate is_universal(const Scope& s, std::size_t f, const Position& pos);

enum class UniversalKind { Tensor, Par, LeftDual, RightDual, InUniversal, OutUniversal };
std::string to_string(UniversalKind k);

struct UniversalObjectResult {
  ObjectId object;
  PolyMap witness;
  UniversalKind kind = UniversalKind::OutUniversal;
  std::optional<PolyMap> partner;  // the cap for duals
  bool cross_validated = true;     // duals: the cup is also out-universal in its dual output
};

// Candidates are scanned by object name, then polymap id; the first certified one wins.
std::optional<UniversalObjectResult> find_out_universal(const Scope& s, const ObjectList& gamma,
                                                        const ObjectList& delta1, const ObjectList& delta2);
std::optional<UniversalObjectResult> find_in_universal(const Scope& s, const ObjectList& gamma1,
                                                       const ObjectList& gamma2, const ObjectList& delta);
std::optional<UniversalObjectResult> find_tensor(const Scope& s, const ObjectList& gamma);
std::optional<UniversalObjectResult> find_par(const Scope& s, const ObjectList& delta);
// Right dual: cup : · -> A,D and cap : D,A -> · with both snake identities.
std::optional<UniversalObjectResult> find_right_dual(const Scope& s, const ObjectId& a);
// Left dual: cup : · -> D,A and cap : A,D -> · with both snake identities.
std::optional<UniversalObjectResult> find_left_dual(const Scope& s, const ObjectId& a);

// The five equivalent conditions for D to be a dual of A, each decided on its own.
struct DualConditions {
  ObjectId object;
  ObjectId candidate;
  bool right = true;
  std::array<bool, 5> holds{};

  bool agree() const;
};
DualConditions dual_conditions(const Scope& s, const ObjectId& a, const ObjectId& d, bool right);

struct BirepDecision {
  bool by_universal_objects = false;  // (a) every context has in- and out-universal objects
  bool by_connectives = false;        // (b) tensors, pars, left and right duals
  std::size_t bound = 0;
  bool bound_relative = false;
  std::vector<std::string> evidence;

  bool agree() const { return by_universal_objects == by_connectives; }
  bool birepresentable() const { return by_universal_objects && by_connectives; }
};

BirepDecision decide_birepresentable(const FinPolycategory& p);

struct CompositionCheckReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Composites of universal polymaps at matching positions are universal.
CompositionCheckReport universal_composition_check(const FinPolycategory& p);

}  // namespace polycat
