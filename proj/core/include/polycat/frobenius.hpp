#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polycat/functor.hpp"
#include "polycat/polycategory.hpp"

namespace polycat {

using Shape = std::pair<std::size_t, std::size_t>;

// A family of (m,n) polymaps A^m -> A^n for every shape within the bound,
// closed under the planar composites that stay in bound.
struct FrobeniusMonoid {
  ObjectId object;
  std::size_t bound = 0;
  std::map<Shape, PolyMap> family;

  const PolyMap& at(std::size_t m, std::size_t n) const;
  std::vector<std::string> lines() const;
};

struct FrobeniusSearch {
  ObjectId object;
  std::size_t bound = 0;
  bool bound_relative = true;
  bool truncated = false;  // result cap reached
  std::vector<FrobeniusMonoid> monoids;
};

// The functor terminal(bound) -> P picking out the family.
PolyFunctor frobenius_functor(const FrobeniusMonoid& fm, const PolycatPtr& p);

// Backtracking over shapes; every result is verified through check_functor on
// frobenius_functor. Throws InvariantError if that verification disagrees.
FrobeniusSearch frobenius_monoids(const PolycatPtr& p, const ObjectId& a, std::size_t bound,
                                  std::size_t max_results = 1024);

// Source objects over fm.object and polymaps over the family.
std::shared_ptr<TablePolycategory> polyfiber(const PolyFunctor& p, const FrobeniusMonoid& fm);

struct RefinementPullback {
  std::shared_ptr<TablePolycategory> total;
  std::shared_ptr<PolyFunctor> to_source;  // E x_B B' -> E
  std::shared_ptr<PolyFunctor> to_base;    // E x_B B' -> B'
  std::size_t checked = 0;
  std::vector<std::string> failures;  // lifts present in E but missing in the pullback

  bool passed() const { return failures.empty(); }
};

// Objects are named "(X,Y)" with p(X) = s(Y); polymaps "(e,f)" with p(e) = s(f).
RefinementPullback refinement_pullback(const PolyFunctor& p, const PolyFunctor& s);

}  // namespace polycat
