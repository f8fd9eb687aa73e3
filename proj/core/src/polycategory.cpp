#include "polycat/polycategory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "polycat/error.hpp"

namespace polycat {
namespace {

bool all_in(const ObjectList& xs, const ObjectList& objects) {
  return std::all_of(xs.begin(), xs.end(), [&](const ObjectId& x) {
    return std::find(objects.begin(), objects.end(), x) != objects.end();
  });
}

void all_lists(const ObjectList& objects, std::size_t length, ObjectList& current,
               std::vector<ObjectList>& out) {
  if (current.size() == length) {
    out.push_back(current);
    return;
  }
  for (const auto& o : objects) {
    current.push_back(o);
    all_lists(objects, length, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ObjectList> lists_of_length(const ObjectList& objects, std::size_t n) {
  std::vector<ObjectList> out;
  ObjectList cur;
  all_lists(objects, n, cur, out);
  return out;
}

std::vector<ObjectList> lists_up_to(const ObjectList& objects, std::size_t n) {
  std::vector<ObjectList> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto l = lists_of_length(objects, len);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

bool FinPolycategory::has_object(const ObjectId& a) const {
  const auto& obs = objects();
  return std::find(obs.begin(), obs.end(), a) != obs.end();
}

bool FinPolycategory::in_bound(const Boundary& b) const {
  return b.domain.size() <= arity_bound() && b.codomain.size() <= arity_bound();
}

std::vector<Boundary> FinPolycategory::boundaries_in_scope() const {
  auto lists = lists_up_to(objects(), arity_bound());
  std::vector<Boundary> out;
  out.reserve(lists.size() * lists.size());
  for (const auto& d : lists)
    for (const auto& c : lists) out.push_back(Boundary{d, c});
  std::sort(out.begin(), out.end(), [](const Boundary& a, const Boundary& b) { return canonical_less(a, b); });
  return out;
}

std::vector<PolyMap> FinPolycategory::polymaps() const {
  std::vector<PolyMap> out;
  for (const auto& b : boundaries_in_scope()) {
    auto h = hom(b);
    out.insert(out.end(), h.begin(), h.end());
  }
  return out;
}

bool canonical_less(const Boundary& a, const Boundary& b) {
  auto ta = a.domain.size() + a.codomain.size();
  auto tb = b.domain.size() + b.codomain.size();
  if (ta != tb) return ta < tb;
  if (a.domain.size() != b.domain.size()) return a.domain.size() < b.domain.size();
  return a < b;
}

bool canonical_less(const PolyMap& a, const PolyMap& b) {
  if (a.boundary != b.boundary) return canonical_less(a.boundary, b.boundary);
  return a.id < b.id;
}

// ---------------------------------------------------------------- monoid

MonoidPolycategory::MonoidPolycategory(std::string name, std::vector<std::string> elements,
                                       std::string unit,
                                       std::vector<std::vector<std::size_t>> mult,
                                       std::size_t bound)
    : name_(std::move(name)), objects_{star()}, elements_(std::move(elements)), mult_(std::move(mult)), bound_(bound) {
  if (bound_ == 0) fail(ErrorCode::InvariantError, "arity bound must be positive");
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (!index_.emplace(elements_[k], k).second)
      fail(ErrorCode::NotAMonoid, "duplicate element '" + elements_[k] + "'");
  }
  unit_ = element_index(unit);
}

const ObjectId& MonoidPolycategory::star() {
  static const ObjectId s{"*"};
  return s;
}

std::size_t MonoidPolycategory::element_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(ErrorCode::UnknownPolymap, "no element '" + label + "' in " + name_);
  return it->second;
}

std::vector<PolyMap> MonoidPolycategory::hom(const Boundary& b) const {
  std::vector<PolyMap> out;
  if (!in_bound(b) || !all_in(b.domain, objects_) || !all_in(b.codomain, objects_)) return out;
  for (const auto& e : elements_) out.push_back(PolyMap{e, b});
  std::sort(out.begin(), out.end(), [](const PolyMap& x, const PolyMap& y) { return x.id < y.id; });
  return out;
}

PolyMap MonoidPolycategory::identity(const ObjectId& a) const {
  if (a != star()) fail(ErrorCode::UnknownObject, "no object '" + a.name + "' in " + name_);
  return PolyMap{elements_[unit_], Boundary{{a}, {a}}};
}

bool MonoidPolycategory::contains(const PolyMap& f) const {
  return index_.count(f.id) && all_in(f.dom(), objects_) && all_in(f.cod(), objects_);
}

PolyMap MonoidPolycategory::compose(const CompositionRequest& req) const {
  if (!contains(req.f)) fail(ErrorCode::UnknownPolymap, to_string(req.f) + " is not in " + name_);
  if (!contains(req.g)) fail(ErrorCode::UnknownPolymap, to_string(req.g) + " is not in " + name_);
  Boundary b = composite_boundary(req.f.boundary, req.i, req.g.boundary, req.j);
  std::size_t r = mult_[element_index(req.g.id)][element_index(req.f.id)];
  return PolyMap{elements_[r], std::move(b)};
}

std::shared_ptr<MonoidPolycategory> terminal(std::size_t bound) {
  if (bound == 0) fail(ErrorCode::InvariantError, "terminal bound must be positive");
  return std::make_shared<MonoidPolycategory>("terminal", std::vector<std::string>{"!"}, "!",
                                              std::vector<std::vector<std::size_t>>{{0}}, bound);
}

std::shared_ptr<MonoidPolycategory> from_monoid(const MonoidPresentation& m, std::size_t bound) {
  const std::size_t n = m.elements.size();
  if (n == 0) fail(ErrorCode::NotAMonoid, "empty carrier");
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t k = 0; k < n; ++k)
    if (!idx.emplace(m.elements[k], k).second) fail(ErrorCode::NotAMonoid, "duplicate element '" + m.elements[k] + "'");
  if (!idx.count(m.unit)) fail(ErrorCode::NotAMonoid, "unit '" + m.unit + "' is not an element");
  if (m.mult.size() != n) fail(ErrorCode::NotAMonoid, "mult table is not total: wrong number of rows");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (m.mult[a].size() != n) fail(ErrorCode::NotAMonoid, "mult table is not total at row '" + m.elements[a] + "'");
    for (std::size_t b = 0; b < n; ++b) {
      auto it = idx.find(m.mult[a][b]);
      if (it == idx.end())
        fail(ErrorCode::NotAMonoid, "product " + m.elements[a] + "·" + m.elements[b] + " = '" + m.mult[a][b] + "' is not an element");
      t[a][b] = it->second;
    }
  }
  const std::size_t e = idx.at(m.unit);
  for (std::size_t a = 0; a < n; ++a)
    if (t[e][a] != a || t[a][e] != a)
      fail(ErrorCode::NotAMonoid, "unit law fails at '" + m.elements[a] + "'");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          fail(ErrorCode::NotAMonoid, "associativity fails at (" + m.elements[a] + ", " + m.elements[b] + ", " + m.elements[c] + ")");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (t[a][b] != t[b][a])
        fail(ErrorCode::NotCommutative, "(" + m.elements[a] + ", " + m.elements[b] + ") do not commute");
  return std::make_shared<MonoidPolycategory>(m.name, m.elements, m.unit, std::move(t), bound);
}

// ----------------------------------------------------------------- table

std::uint64_t TablePolycategory::key(std::size_t f, std::size_t i, std::size_t g, std::size_t j) {
  return (static_cast<std::uint64_t>(f) << 40) | (static_cast<std::uint64_t>(i) << 32) |
         (static_cast<std::uint64_t>(g) << 8) | static_cast<std::uint64_t>(j);
}

void TablePolycategory::index_maps() {
  std::sort(maps_.begin(), maps_.end(), [](const PolyMap& a, const PolyMap& b) { return canonical_less(a, b); });
  index_.clear();
  homs_.clear();
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    if (!index_.emplace(maps_[k], k).second)
      fail(ErrorCode::InvariantError, "duplicate polymap id '" + maps_[k].id + "' in hom " + to_string(maps_[k].boundary));
    homs_[maps_[k].boundary].push_back(k);
  }
}

TablePolycategory::TablePolycategory(std::string name, ObjectList objects, std::size_t bound,
                                     std::vector<PolyMap> polymaps,
                                     std::map<ObjectId, PolyMap> identities,
                                     const std::vector<CompositionEntry>& entries)
    : name_(std::move(name)), objects_(std::move(objects)), bound_(bound), maps_(std::move(polymaps)),
      identities_(std::move(identities)) {
  if (bound_ == 0 || bound_ > 15) fail(ErrorCode::InvariantError, "arity bound must lie in 1..15");
  std::set<ObjectId> seen;
  for (const auto& o : objects_)
    if (!seen.insert(o).second) fail(ErrorCode::InvariantError, "duplicate object '" + o.name + "'");
  for (const auto& f : maps_) {
    if (!all_in(f.dom(), objects_) || !all_in(f.cod(), objects_))
      fail(ErrorCode::InvariantError, "polymap " + to_string(f) + " uses an unknown object");
    if (!in_bound(f.boundary))
      fail(ErrorCode::InvariantError, "polymap " + to_string(f) + " exceeds the arity bound " + std::to_string(bound_));
  }
  index_maps();
  for (const auto& o : objects_) {
    auto it = identities_.find(o);
    if (it == identities_.end()) fail(ErrorCode::InvariantError, "object '" + o.name + "' has no identity");
    if (it->second.boundary != Boundary{{o}, {o}})
      fail(ErrorCode::InvariantError, "identity of '" + o.name + "' has boundary " + to_string(it->second.boundary));
    if (!index_.count(it->second)) fail(ErrorCode::InvariantError, "identity " + to_string(it->second) + " is not a listed polymap");
  }
  if (identities_.size() != objects_.size()) fail(ErrorCode::InvariantError, "identity listed for an unknown object");
  for (const auto& e : entries) {
    const auto& r = e.request;
    auto fi = index_.find(r.f);
    auto gi = index_.find(r.g);
    if (fi == index_.end()) fail(ErrorCode::InvariantError, "composition entry uses unknown polymap " + to_string(r.f));
    if (gi == index_.end()) fail(ErrorCode::InvariantError, "composition entry uses unknown polymap " + to_string(r.g));
    PlanResult plan;
    try {
      plan = plan_composition(r.f.boundary, r.i, r.g.boundary, r.j);
    } catch (const Error& err) {
      fail(ErrorCode::InvariantError, "composition entry is ill-typed: " + err.detail());
    }
    if (std::holds_alternative<PlanarityViolation>(plan))
      fail(ErrorCode::InvariantError, "composition entry for a non-planar cut " + to_string(r.f) + " at " +
                                          std::to_string(r.i) + " into " + to_string(r.g) + " at " + std::to_string(r.j));
    const auto& b = std::get<Boundary>(plan);
    if (!in_bound(b)) fail(ErrorCode::InvariantError, "composition entry beyond the arity bound: " + to_string(b));
    if (e.result.boundary != b)
      fail(ErrorCode::InvariantError, "composite " + to_string(e.result) + " should have boundary " + to_string(b));
    auto ri = index_.find(e.result);
    if (ri == index_.end()) fail(ErrorCode::InvariantError, "composite " + to_string(e.result) + " is not a listed polymap");
    if (!table_.emplace(key(fi->second, r.i, gi->second, r.j), ri->second).second)
      fail(ErrorCode::InvariantError, "duplicate composition entry for " + to_string(r.f) + " at " + std::to_string(r.i) +
                                          " into " + to_string(r.g) + " at " + std::to_string(r.j));
  }
  check_totality();
}

void TablePolycategory::check_totality() const {
  for (std::size_t f = 0; f < maps_.size(); ++f) {
    const auto& fb = maps_[f].boundary;
    for (std::size_t g = 0; g < maps_.size(); ++g) {
      const auto& gb = maps_[g].boundary;
      if (fb.domain.size() + gb.domain.size() > bound_ + 1) continue;
      if (fb.codomain.size() + gb.codomain.size() > bound_ + 1) continue;
      for (std::size_t i = 0; i < fb.codomain.size(); ++i)
        for (std::size_t j = 0; j < gb.domain.size(); ++j) {
          if (!is_planar_cut(fb, i, gb, j)) continue;
          if (!table_.count(key(f, i, g, j)))
            fail(ErrorCode::InvariantError, "composition undefined for " + to_string(maps_[f]) + " at " + std::to_string(i) +
                                                " into " + to_string(maps_[g]) + " at " + std::to_string(j));
        }
    }
  }
}

TablePolycategory TablePolycategory::tabulate(std::string name, ObjectList objects, std::size_t bound,
                                              const HomFn& hom, const IdentityFn& identity,
                                              const ComposeFn& compose) {
  TablePolycategory t;
  t.name_ = std::move(name);
  t.objects_ = std::move(objects);
  t.bound_ = bound;
  if (bound == 0 || bound > 15) fail(ErrorCode::InvariantError, "arity bound must lie in 1..15");
  for (const auto& b : t.boundaries_in_scope()) {
    auto h = hom(b);
    for (auto& f : h) {
      if (f.boundary != b) fail(ErrorCode::InvariantError, "hom enumeration returned " + to_string(f) + " for " + to_string(b));
      t.maps_.push_back(std::move(f));
    }
  }
  t.index_maps();
  for (const auto& o : t.objects_) {
    auto id = identity(o);
    if (!t.index_.count(id)) fail(ErrorCode::InvariantError, "identity " + to_string(id) + " is not enumerated");
    t.identities_.emplace(o, id);
  }
  for (std::size_t f = 0; f < t.maps_.size(); ++f) {
    const auto& fb = t.maps_[f].boundary;
    for (std::size_t g = 0; g < t.maps_.size(); ++g) {
      const auto& gb = t.maps_[g].boundary;
      if (fb.domain.size() + gb.domain.size() > bound + 1) continue;
      if (fb.codomain.size() + gb.codomain.size() > bound + 1) continue;
      for (std::size_t i = 0; i < fb.codomain.size(); ++i)
        for (std::size_t j = 0; j < gb.domain.size(); ++j) {
          if (!is_planar_cut(fb, i, gb, j)) continue;
          PolyMap r = compose(CompositionRequest{t.maps_[f], i, t.maps_[g], j});
          auto it = t.index_.find(r);
          if (it == t.index_.end()) fail(ErrorCode::InvariantError, "composite " + to_string(r) + " is not enumerated");
          if (it->first.boundary != composite_boundary(fb, i, gb, j))
            fail(ErrorCode::InvariantError, "composite " + to_string(r) + " has the wrong boundary");
          t.table_.emplace(key(f, i, g, j), it->second);
        }
    }
  }
  return t;
}

std::size_t TablePolycategory::index_of(const PolyMap& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) fail(ErrorCode::UnknownPolymap, to_string(f) + " is not in " + name_);
  return it->second;
}

std::vector<PolyMap> TablePolycategory::hom(const Boundary& b) const {
  std::vector<PolyMap> out;
  auto it = homs_.find(b);
  if (it == homs_.end()) return out;
  for (auto k : it->second) out.push_back(maps_[k]);
  return out;
}

PolyMap TablePolycategory::identity(const ObjectId& a) const {
  auto it = identities_.find(a);
  if (it == identities_.end()) fail(ErrorCode::UnknownObject, "no object '" + a.name + "' in " + name_);
  return it->second;
}

bool TablePolycategory::contains(const PolyMap& f) const { return index_.count(f) > 0; }

PolyMap TablePolycategory::compose(const CompositionRequest& req) const {
  std::size_t f = index_of(req.f);
  std::size_t g = index_of(req.g);
  Boundary b = composite_boundary(req.f.boundary, req.i, req.g.boundary, req.j);
  if (!in_bound(b))
    fail(ErrorCode::OutOfBound, "composite " + to_string(b) + " exceeds the arity bound " + std::to_string(bound_) + " of " + name_);
  auto it = table_.find(key(f, req.i, g, req.j));
  if (it == table_.end()) fail(ErrorCode::InvariantError, "composition table has no entry");
  return maps_[it->second];
}

std::vector<CompositionEntry> TablePolycategory::entries() const {
  std::vector<std::pair<std::uint64_t, std::size_t>> sorted(table_.begin(), table_.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<CompositionEntry> out;
  out.reserve(sorted.size());
  for (const auto& [k, r] : sorted) {
    std::size_t f = k >> 40, i = (k >> 32) & 0xff, g = (k >> 8) & 0xffffff, j = k & 0xff;
    out.push_back(CompositionEntry{CompositionRequest{maps_[f], i, maps_[g], j}, maps_[r]});
  }
  return out;
}

TablePolycategory TablePolycategory::with_composition(const CompositionRequest& req, const PolyMap& result) const {
  TablePolycategory t = *this;
  std::size_t f = index_of(req.f);
  std::size_t g = index_of(req.g);
  auto it = t.table_.find(key(f, req.i, g, req.j));
  if (it == t.table_.end()) fail(ErrorCode::InvariantError, "no composition entry to replace");
  Boundary b = composite_boundary(req.f.boundary, req.i, req.g.boundary, req.j);
  if (result.boundary != b) fail(ErrorCode::InvariantError, "replacement " + to_string(result) + " has the wrong boundary");
  it->second = index_of(result);
  return t;
}

std::shared_ptr<TablePolycategory> materialize(const FinPolycategory& p, std::size_t bound, std::string name) {
  if (bound == 0) bound = p.arity_bound();
  if (name.empty()) name = p.name();
  auto t = TablePolycategory::tabulate(
      std::move(name), p.objects(), bound,
      [&](const Boundary& b) {
        if (b.domain.size() <= p.arity_bound() && b.codomain.size() <= p.arity_bound()) return p.hom(b);
        return std::vector<PolyMap>{};
      },
      [&](const ObjectId& a) { return p.identity(a); },
      [&](const CompositionRequest& r) { return p.compose(r); });
  return std::make_shared<TablePolycategory>(std::move(t));
}

}  // namespace polycat
