#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "polycat/polycategory.hpp"

namespace polycat {

// An indexed snapshot of the in-bound polymaps of a polycategory with a
// memoized composition. Composites outside the bound are reported as absent.
// The polycategory must outlive the scope.
class Scope {
 public:
  explicit Scope(const FinPolycategory& p);

  const FinPolycategory& polycat() const { return *p_; }
  std::size_t bound() const { return bound_; }
  std::size_t size() const { return maps_.size(); }
  const PolyMap& at(std::size_t k) const { return maps_[k]; }
  const std::vector<PolyMap>& maps() const { return maps_; }

  std::optional<std::size_t> find(const PolyMap& f) const;
  std::size_t index(const PolyMap& f) const;
  const std::vector<std::size_t>& hom(const Boundary& b) const;
  std::size_t identity(const ObjectId& a) const;
  // Polymaps with the given input and output arity.
  const std::vector<std::size_t>& by_shape(std::size_t m, std::size_t n) const;
  bool in_bound(const Boundary& b) const {
    return b.domain.size() <= bound_ && b.codomain.size() <= bound_;
  }

  // Absent when the cut is ill-typed, crossing, or leaves the bound.
  std::optional<std::size_t> compose(std::size_t f, std::size_t i, std::size_t g, std::size_t j) const;

 private:
  const FinPolycategory* p_;
  std::size_t bound_;
  std::vector<PolyMap> maps_;
  std::unordered_map<PolyMap, std::size_t> index_;
  std::unordered_map<Boundary, std::vector<std::size_t>> homs_;
  std::unordered_map<ObjectId, std::size_t> identities_;
  std::vector<std::vector<std::vector<std::size_t>>> shapes_;
  mutable std::unordered_map<std::uint64_t, std::int64_t> cache_;
};

}  // namespace polycat
