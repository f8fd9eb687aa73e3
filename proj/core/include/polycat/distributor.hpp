#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycat/fincat.hpp"
#include "polycat/universal.hpp"

namespace polycat {

// An element of P(S_1..S_n ; R_1..R_m), object indices into the boundary categories.
struct DistElement {
  std::string name;
  std::vector<std::size_t> outs;
  std::vector<std::size_t> ins;
};

// P : A_1 x ... x A_m -/-> B_1 x ... x B_n as a set-valued functor, covariant
// in the outputs and contravariant in the inputs.
//   Out j: xi : S -> S' sends P(..S..; ) to P(..S'..; ).
//   In i:  psi : R' -> R sends P( ; ..R..) to P( ; ..R'..).
class FinDistributor {
 public:
  using ElementsFn = std::function<std::vector<std::string>(const std::vector<std::size_t>& outs,
                                                            const std::vector<std::size_t>& ins)>;
  // Name of the image element, which lives in the acted-on tuple.
  using ActFn = std::function<std::string(const Position& var, std::size_t morphism, const DistElement& x)>;

  // Enumerates every boundary tuple; checks functoriality of the actions and
  // that actions in different variables commute (InvariantError).
  static FinDistributor tabulate(std::string name, std::vector<CatPtr> inputs, std::vector<CatPtr> outputs,
                                 const ElementsFn& elements, const ActFn& act);

  const std::string& name() const { return name_; }
  const std::vector<CatPtr>& inputs() const { return inputs_; }
  const std::vector<CatPtr>& outputs() const { return outputs_; }
  const CatPtr& category(const Position& var) const;
  std::size_t size() const { return elements_.size(); }
  const std::vector<DistElement>& elements() const { return elements_; }
  const DistElement& element(std::size_t k) const { return elements_[k]; }
  const std::vector<std::size_t>& at(const std::vector<std::size_t>& outs, const std::vector<std::size_t>& ins) const;
  std::optional<std::size_t> find(const std::vector<std::size_t>& outs, const std::vector<std::size_t>& ins,
                                  const std::string& name) const;
  // Throws TypeMismatch when the morphism does not apply to the element.
  std::size_t act(const Position& var, std::size_t morphism, std::size_t element) const;
  bool applies(const Position& var, std::size_t morphism, std::size_t element) const;

  // Data-level mutation for tests: the result is not re-checked.
  FinDistributor with_action(const Position& var, std::size_t morphism, std::size_t element, std::size_t image) const;

 private:
  void check() const;
  std::size_t slot(const Position& var) const;

  std::string name_;
  std::vector<CatPtr> inputs_;
  std::vector<CatPtr> outputs_;
  std::vector<DistElement> elements_;
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::vector<std::size_t>> tuples_;
  // actions_[slot][morphism][element], npos when inapplicable; inputs first.
  std::vector<std::vector<std::vector<std::size_t>>> actions_;
};

using DistPtr = std::shared_ptr<const FinDistributor>;

// hom(S ; R) = C(R, S).
FinDistributor hom_distributor(const CatPtr& c);

struct DistributorComposite {
  std::shared_ptr<FinDistributor> result;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> class_of;  // (p element, q element) -> class
  std::vector<std::pair<std::size_t, std::size_t>> representative;      // least pair of each class
};

// Cut p's output i into q's input j: the coend over the shared category,
// computed by union-find over sliding moves. Throws BoundaryMismatch or
// PlanarityViolation.
DistributorComposite compose_distributors(const FinDistributor& p, std::size_t i, const FinDistributor& q,
                                          std::size_t j);

// Failures of map as a distributor morphism a -> b (tuples and all actions);
// with bijective, also injectivity and surjectivity.
std::vector<std::string> check_distributor_map(const FinDistributor& a, const FinDistributor& b,
                                               const std::vector<std::size_t>& map, bool bijective);

// Yoneda check in one variable: for each fixing of the other variables some
// object and element represent the variable. Returns the first unrepresented
// fixing, described, or nullopt.
std::optional<std::string> representability_failure(const FinDistributor& d, const Position& var);

}  // namespace polycat
