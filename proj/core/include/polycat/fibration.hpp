#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycat/functor.hpp"
#include "polycat/scope.hpp"
#include "polycat/universal.hpp"

namespace polycat {

struct CartesianFailure {
  PolyMap xi;
  std::size_t split = 0;
  PolyMap base_factor;
  std::size_t lifts = 0;  // 0 = missing, >1 = not unique
};

struct CartesianCertificate {
  PolyMap polymap;
  Position position;
  std::string functor;
  std::size_t bound = 0;
  bool bound_relative = false;
  std::size_t checked_instances = 0;
  std::size_t skipped_out_of_bound = 0;
  std::optional<CartesianFailure> failure;

  bool cartesian() const { return !failure.has_value(); }
  std::vector<std::string> lines() const;
};

// Indexed source and base scopes of a functor with memoized certificates.
// The functor must outlive the context.
class FibrationContext {
 public:
  explicit FibrationContext(const PolyFunctor& p);

  const PolyFunctor& functor() const { return *p_; }
  const Scope& source() const { return source_; }
  const Scope& base() const { return base_; }
  std::size_t image(std::size_t e) const { return image_[e]; }
  // Source objects over a base object, sorted by name.
  const ObjectList& fibre(const ObjectId& a) const;
  // Every tuple of source objects lying over the given base list.
  std::vector<ObjectList> fibre_tuples(const ObjectList& base_list) const;

  const CartesianCertificate& in_cartesian(std::size_t psi, std::size_t j) const;
  const CartesianCertificate& out_cartesian(std::size_t phi, std::size_t i) const;
  const CartesianCertificate& cartesian(std::size_t f, const Position& pos) const;

 private:
  CartesianCertificate compute_in(std::size_t psi, std::size_t j) const;
  CartesianCertificate compute_out(std::size_t phi, std::size_t i) const;

  const PolyFunctor* p_;
  Scope source_;
  Scope base_;
  std::vector<std::size_t> image_;
  std::map<ObjectId, ObjectList> fibres_;
  mutable std::map<std::pair<std::size_t, Position>, CartesianCertificate> cache_;
};

CartesianCertificate is_in_cartesian(const PolyFunctor& p, const PolyMap& psi, std::size_t j);
CartesianCertificate is_out_cartesian(const PolyFunctor& p, const PolyMap& phi, std::size_t i);

struct Lift {
  ObjectId object;
  PolyMap polymap;
};

// Pullback of base f at input j for fibre lists pi1, pi2 (over the rest of the
// domain) and sigma (over the codomain): an in-cartesian lift, or none.
std::optional<Lift> pullback_exists(const FibrationContext& c, const PolyMap& f, std::size_t j, const ObjectList& pi1,
                                    const ObjectList& pi2, const ObjectList& sigma);
// Pushforward of base f at output i for fibre lists pi (domain), sigma1, sigma2.
std::optional<Lift> pushforward_exists(const FibrationContext& c, const PolyMap& f, std::size_t i, const ObjectList& pi,
                                       const ObjectList& sigma1, const ObjectList& sigma2);

struct FibrationDecision {
  bool holds = false;
  std::size_t checked = 0;
  std::size_t bound = 0;
  std::vector<std::string> evidence;
  // First missing lift: base polymap and position, when holds is false.
  std::optional<std::pair<PolyMap, Position>> missing;
};

FibrationDecision decide_pull_fibration(const FibrationContext& c);
FibrationDecision decide_push_fibration(const FibrationContext& c);

struct BifibrationDecision {
  FibrationDecision pull;
  FibrationDecision push;
  bool holds() const { return pull.holds && push.holds; }
};

BifibrationDecision decide_bifibration(const PolyFunctor& p);
BifibrationDecision decide_bifibration(const FibrationContext& c);

struct BirepBifibReport {
  BirepDecision birep;
  BifibrationDecision bifib;
  bool agree() const { return birep.agree() && birep.birepresentable() == bifib.holds(); }
};

BirepBifibReport birep_bifib_crosscheck(const PolycatPtr& p);

// Composites of cartesian polymaps at matching positions are cartesian.
CompositionCheckReport cartesian_composition_check(const PolyFunctor& p);

// psi p-cartesian and p(psi) q-cartesian implies psi (q after p)-cartesian.
CompositionCheckReport cartesian_over_cartesian_check(const PolyFunctor& p, const PolyFunctor& q);
// Same with the composite given explicitly; polymaps where it differs from
// q after p are reported as failures too.
CompositionCheckReport cartesian_over_cartesian_check(const PolyFunctor& p, const PolyFunctor& q,
                                                      const PolyFunctor& composite);

}  // namespace polycat
