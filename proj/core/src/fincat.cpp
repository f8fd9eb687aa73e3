#include "polycat/fincat.hpp"

#include <set>

#include "polycat/error.hpp"

namespace polycat {

FinCategory::FinCategory(std::string name, ObjectList objects, std::vector<Morphism> morphisms,
                         std::vector<std::size_t> identities,
                         std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      compose_(std::move(compose)) {
  const std::size_t n = objects_.size();
  if (std::set<ObjectId>(objects_.begin(), objects_.end()).size() != n)
    fail(ErrorCode::InvariantError, name_ + ": duplicate object");
  std::set<std::string> ids;
  for (const auto& m : morphisms_) {
    if (m.source >= n || m.target >= n) fail(ErrorCode::InvariantError, name_ + ": morphism " + m.id + " has an unknown endpoint");
    if (!ids.insert(m.id).second) fail(ErrorCode::InvariantError, name_ + ": duplicate morphism " + m.id);
  }
  if (identities_.size() != n) fail(ErrorCode::InvariantError, name_ + ": one identity per object required");
  homs_.assign(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t k = 0; k < morphisms_.size(); ++k) homs_[morphisms_[k].source][morphisms_[k].target].push_back(k);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t e = identities_[a];
    if (e >= morphisms_.size() || morphisms_[e].source != a || morphisms_[e].target != a)
      fail(ErrorCode::InvariantError, name_ + ": identity of " + objects_[a].name + " is not an endomorphism");
  }
  for (std::size_t f = 0; f < morphisms_.size(); ++f)
    for (std::size_t g = 0; g < morphisms_.size(); ++g) {
      if (morphisms_[f].target != morphisms_[g].source) continue;
      auto it = compose_.find({g, f});
      if (it == compose_.end() || it->second >= morphisms_.size())
        fail(ErrorCode::InvariantError, name_ + ": composite " + morphisms_[g].id + "." + morphisms_[f].id + " missing");
      const auto& c = morphisms_[it->second];
      if (c.source != morphisms_[f].source || c.target != morphisms_[g].target)
        fail(ErrorCode::InvariantError, name_ + ": composite " + morphisms_[g].id + "." + morphisms_[f].id + " has the wrong endpoints");
    }
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    const auto& m = morphisms_[f];
    if (this->compose(identities_[m.target], f) != f || this->compose(f, identities_[m.source]) != f)
      fail(ErrorCode::InvariantError, name_ + ": unit law fails at " + m.id);
  }
  for (std::size_t f = 0; f < morphisms_.size(); ++f)
    for (std::size_t b = 0; b < n; ++b)
      for (auto g : homs_[morphisms_[f].target][b])
        for (std::size_t c = 0; c < n; ++c)
          for (auto h : homs_[b][c])
            if (this->compose(h, this->compose(g, f)) != this->compose(this->compose(h, g), f))
              fail(ErrorCode::InvariantError, name_ + ": associativity fails at " + morphisms_[h].id + "." +
                                                  morphisms_[g].id + "." + morphisms_[f].id);
}

FinCategory FinCategory::discrete(std::string name, ObjectList objects) {
  std::vector<Morphism> ms;
  std::vector<std::size_t> ids;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
  for (std::size_t a = 0; a < objects.size(); ++a) {
    ms.push_back(Morphism{"id_" + objects[a].name, a, a});
    ids.push_back(a);
    comp[{a, a}] = a;
  }
  return FinCategory(std::move(name), std::move(objects), std::move(ms), std::move(ids), std::move(comp));
}

std::size_t FinCategory::object_index(const ObjectId& a) const {
  for (std::size_t k = 0; k < objects_.size(); ++k)
    if (objects_[k] == a) return k;
  fail(ErrorCode::UnknownObject, a.name + " is not an object of " + name_);
}

std::size_t FinCategory::morphism_index(const std::string& id) const {
  for (std::size_t k = 0; k < morphisms_.size(); ++k)
    if (morphisms_[k].id == id) return k;
  fail(ErrorCode::UnknownPolymap, id + " is not a morphism of " + name_);
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  auto it = compose_.find({g, f});
  if (it == compose_.end())
    fail(ErrorCode::TypeMismatch, "cannot compose " + morphisms_[g].id + " after " + morphisms_[f].id);
  return it->second;
}

const std::vector<std::size_t>& FinCategory::hom(std::size_t a, std::size_t b) const { return homs_[a][b]; }

}  // namespace polycat
