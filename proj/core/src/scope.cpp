#include "polycat/scope.hpp"

#include "polycat/error.hpp"

namespace polycat {

Scope::Scope(const FinPolycategory& p) : p_(&p), bound_(p.arity_bound()), maps_(p.polymaps()) {
  shapes_.assign(bound_ + 1, std::vector<std::vector<std::size_t>>(bound_ + 1));
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    index_.emplace(maps_[k], k);
    homs_[maps_[k].boundary].push_back(k);
    shapes_[maps_[k].dom().size()][maps_[k].cod().size()].push_back(k);
  }
  for (const auto& o : p.objects()) identities_.emplace(o, index(p.identity(o)));
}

std::optional<std::size_t> Scope::find(const PolyMap& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Scope::index(const PolyMap& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) fail(ErrorCode::UnknownPolymap, to_string(f) + " is not in the scope of " + p_->name());
  return it->second;
}

const std::vector<std::size_t>& Scope::hom(const Boundary& b) const {
  static const std::vector<std::size_t> empty;
  auto it = homs_.find(b);
  return it == homs_.end() ? empty : it->second;
}

std::size_t Scope::identity(const ObjectId& a) const {
  auto it = identities_.find(a);
  if (it == identities_.end()) fail(ErrorCode::UnknownObject, "no object '" + a.name + "' in " + p_->name());
  return it->second;
}

const std::vector<std::size_t>& Scope::by_shape(std::size_t m, std::size_t n) const {
  static const std::vector<std::size_t> empty;
  if (m > bound_ || n > bound_) return empty;
  return shapes_[m][n];
}

std::optional<std::size_t> Scope::compose(std::size_t f, std::size_t i, std::size_t g, std::size_t j) const {
  const auto& fb = maps_[f].boundary;
  const auto& gb = maps_[g].boundary;
  if (!is_planar_cut(fb, i, gb, j)) return std::nullopt;
  if (fb.domain.size() + gb.domain.size() > bound_ + 1) return std::nullopt;
  if (fb.codomain.size() + gb.codomain.size() > bound_ + 1) return std::nullopt;
  std::uint64_t k = (static_cast<std::uint64_t>(f) << 40) | (static_cast<std::uint64_t>(i) << 32) |
                    (static_cast<std::uint64_t>(g) << 8) | static_cast<std::uint64_t>(j);
  auto it = cache_.find(k);
  if (it != cache_.end()) {
    if (it->second < 0) return std::nullopt;
    return static_cast<std::size_t>(it->second);
  }
  PolyMap r = p_->compose(CompositionRequest{maps_[f], i, maps_[g], j});
  std::size_t ri = index(r);
  cache_.emplace(k, static_cast<std::int64_t>(ri));
  return ri;
}

}  // namespace polycat
