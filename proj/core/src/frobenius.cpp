#include "polycat/frobenius.hpp"

#include <algorithm>

#include "polycat/error.hpp"
#include "polycat/fibration.hpp"
#include "polycat/scope.hpp"

namespace polycat {

const PolyMap& FrobeniusMonoid::at(std::size_t m, std::size_t n) const {
  auto it = family.find(Shape{m, n});
  if (it == family.end())
    fail(ErrorCode::OutOfBound, "shape (" + std::to_string(m) + "," + std::to_string(n) + ") exceeds bound " +
                                    std::to_string(bound));
  return it->second;
}

std::vector<std::string> FrobeniusMonoid::lines() const {
  std::vector<std::string> out;
  for (const auto& [s, f] : family)
    out.push_back("(" + std::to_string(s.first) + "," + std::to_string(s.second) + ") = " + to_string(f));
  return out;
}

PolyFunctor frobenius_functor(const FrobeniusMonoid& fm, const PolycatPtr& p) {
  PolycatPtr t = terminal(fm.bound);
  ObjectId a = fm.object;
  auto family = fm.family;
  return PolyFunctor(
      "frob(" + a.name + ")", t, p, [a](const ObjectId&) { return a; },
      [family, bound = fm.bound](const PolyMap& f) {
        auto it = family.find(Shape{f.dom().size(), f.cod().size()});
        if (it == family.end()) fail(ErrorCode::OutOfBound, to_string(f) + " exceeds bound " + std::to_string(bound));
        return it->second;
      });
}

namespace {

struct Constraint {
  std::size_t s1, i, s2, j, s3;
};

class FrobeniusEnumerator {
 public:
  FrobeniusEnumerator(const PolycatPtr& p, const ObjectId& a, std::size_t bound, std::size_t cap)
      : p_(p), scope_(*p), a_(a), bound_(bound), cap_(cap) {
    std::vector<Shape> all;
    for (std::size_t m = 0; m <= bound; ++m)
      for (std::size_t n = 0; n <= bound; ++n) all.emplace_back(m, n);
    std::stable_sort(all.begin(), all.end(), [](const Shape& x, const Shape& y) {
      bool xi = x == Shape{1, 1}, yi = y == Shape{1, 1};
      if (xi != yi) return xi;
      return x.first + x.second < y.first + y.second;
    });
    shapes_ = all;
    for (std::size_t k = 0; k < shapes_.size(); ++k) index_[shapes_[k]] = k;
    for (const auto& s : shapes_) {
      if (s == Shape{1, 1}) {
        candidates_.push_back({scope_.identity(a_)});
      } else {
        candidates_.push_back(scope_.hom(boundary(s)));
      }
    }
    by_last_.resize(shapes_.size());
    for (std::size_t x = 0; x < shapes_.size(); ++x)
      for (std::size_t y = 0; y < shapes_.size(); ++y) {
        Boundary fb = boundary(shapes_[x]), gb = boundary(shapes_[y]);
        for (std::size_t i = 0; i < fb.codomain.size(); ++i)
          for (std::size_t j = 0; j < gb.domain.size(); ++j) {
            if (!is_planar_cut(fb, i, gb, j)) continue;
            Shape s3{fb.domain.size() + gb.domain.size() - 1, fb.codomain.size() + gb.codomain.size() - 1};
            auto it = index_.find(s3);
            if (it == index_.end()) continue;
            std::size_t last = std::max({x, y, it->second});
            by_last_[last].push_back(Constraint{x, i, y, j, it->second});
          }
      }
  }

  FrobeniusSearch run() {
    FrobeniusSearch out;
    out.object = a_;
    out.bound = bound_;
    chosen_.assign(shapes_.size(), 0);
    search(0, out);
    return out;
  }

 private:
  Boundary boundary(const Shape& s) const {
    return Boundary{ObjectList(s.first, a_), ObjectList(s.second, a_)};
  }

  bool consistent(std::size_t k) const {
    for (const auto& c : by_last_[k]) {
      auto r = scope_.compose(chosen_[c.s1], c.i, chosen_[c.s2], c.j);
      if (!r || *r != chosen_[c.s3]) return false;
    }
    return true;
  }

  void search(std::size_t k, FrobeniusSearch& out) {
    if (out.truncated) return;
    if (k == shapes_.size()) {
      if (out.monoids.size() >= cap_) {
        out.truncated = true;
        return;
      }
      FrobeniusMonoid fm;
      fm.object = a_;
      fm.bound = bound_;
      for (std::size_t s = 0; s < shapes_.size(); ++s) fm.family.emplace(shapes_[s], scope_.at(chosen_[s]));
      out.monoids.push_back(std::move(fm));
      return;
    }
    for (auto c : candidates_[k]) {
      chosen_[k] = c;
      if (consistent(k)) search(k + 1, out);
      if (out.truncated) return;
    }
  }

  PolycatPtr p_;
  Scope scope_;
  ObjectId a_;
  std::size_t bound_;
  std::size_t cap_;
  std::vector<Shape> shapes_;
  std::map<Shape, std::size_t> index_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::vector<Constraint>> by_last_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

FrobeniusSearch frobenius_monoids(const PolycatPtr& p, const ObjectId& a, std::size_t bound, std::size_t max_results) {
  if (!p->has_object(a)) fail(ErrorCode::UnknownObject, a.name + " is not an object of " + p->name());
  bound = std::min(bound, p->arity_bound());
  if (bound == 0) fail(ErrorCode::OutOfBound, "Frobenius search needs a positive bound");
  FrobeniusEnumerator e(p, a, bound, max_results);
  FrobeniusSearch out = e.run();
  for (const auto& fm : out.monoids) {
    auto report = check_functor(frobenius_functor(fm, p));
    if (!report.passed())
      fail(ErrorCode::InvariantError, "family on " + a.name + " is closed but not a functor from terminal: " +
                                          report.failures.front());
  }
  return out;
}

std::shared_ptr<TablePolycategory> polyfiber(const PolyFunctor& p, const FrobeniusMonoid& fm) {
  const FinPolycategory& e = p.source();
  if (!p.target().has_object(fm.object))
    fail(ErrorCode::UnknownObject, fm.object.name + " is not an object of " + p.target().name());
  ObjectList objects;
  for (const auto& x : e.objects())
    if (p(x) == fm.object) objects.push_back(x);
  std::size_t bound = std::min(e.arity_bound(), fm.bound);
  auto t = TablePolycategory::tabulate(
      "fibre(" + p.name() + "," + fm.object.name + ")", objects, bound,
      [&](const Boundary& b) {
        std::vector<PolyMap> out;
        const PolyMap& over = fm.at(b.domain.size(), b.codomain.size());
        for (const auto& f : e.hom(b))
          if (p(f) == over) out.push_back(f);
        return out;
      },
      [&](const ObjectId& x) { return e.identity(x); },
      [&](const CompositionRequest& r) { return e.compose(r); });
  return std::make_shared<TablePolycategory>(std::move(t));
}

namespace {

ObjectList project(const ObjectList& xs, const std::map<ObjectId, std::pair<ObjectId, ObjectId>>& pairs, bool first) {
  ObjectList out;
  for (const auto& x : xs) {
    const auto& pr = pairs.at(x);
    out.push_back(first ? pr.first : pr.second);
  }
  return out;
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

RefinementPullback refinement_pullback(const PolyFunctor& p, const PolyFunctor& s) {
  const FinPolycategory& e = p.source();
  const FinPolycategory& b2 = s.source();
  if (p.target().name() != s.target().name() || p.target().arity_bound() != s.target().arity_bound())
    fail(ErrorCode::BoundaryMismatch, "functors " + p.name() + " and " + s.name() + " have different targets");

  auto pairs = std::make_shared<std::map<ObjectId, std::pair<ObjectId, ObjectId>>>();
  auto maps = std::make_shared<std::map<PolyMap, std::pair<PolyMap, PolyMap>>>();
  ObjectList objects;
  for (const auto& x : e.objects())
    for (const auto& y : b2.objects())
      if (p(x) == s(y)) {
        ObjectId xy{pair_name(x.name, y.name)};
        if (pairs->count(xy)) fail(ErrorCode::InvariantError, "object name " + xy.name + " is ambiguous");
        pairs->emplace(xy, std::make_pair(x, y));
        objects.push_back(xy);
      }
  std::size_t bound = std::min(e.arity_bound(), b2.arity_bound());

  auto make = [&](const PolyMap& f, const PolyMap& g, const Boundary& b) {
    PolyMap fg{pair_name(f.id, g.id), b};
    maps->emplace(fg, std::make_pair(f, g));
    return fg;
  };
  auto pair_list = [&](const ObjectList& xs, const ObjectList& ys) {
    ObjectList out;
    for (std::size_t k = 0; k < xs.size(); ++k) out.push_back(ObjectId{pair_name(xs[k].name, ys[k].name)});
    return out;
  };

  auto t = TablePolycategory::tabulate(
      "(" + p.name() + ")x(" + s.name() + ")", objects, bound,
      [&](const Boundary& b) {
        std::vector<PolyMap> out;
        Boundary be{project(b.domain, *pairs, true), project(b.codomain, *pairs, true)};
        Boundary bb{project(b.domain, *pairs, false), project(b.codomain, *pairs, false)};
        auto gs = b2.hom(bb);
        for (const auto& f : e.hom(be)) {
          PolyMap pf = p(f);
          for (const auto& g : gs)
            if (s(g) == pf) out.push_back(make(f, g, b));
        }
        return out;
      },
      [&](const ObjectId& xy) {
        const auto& [x, y] = pairs->at(xy);
        PolyMap ix = e.identity(x), iy = b2.identity(y);
        return PolyMap{pair_name(ix.id, iy.id), Boundary{{xy}, {xy}}};
      },
      [&](const CompositionRequest& r) {
        const auto& [f1, g1] = maps->at(r.f);
        const auto& [f2, g2] = maps->at(r.g);
        PolyMap fc = e.compose(CompositionRequest{f1, r.i, f2, r.j});
        PolyMap gc = b2.compose(CompositionRequest{g1, r.i, g2, r.j});
        return PolyMap{pair_name(fc.id, gc.id), Boundary{pair_list(fc.dom(), gc.dom()), pair_list(fc.cod(), gc.cod())}};
      });

  RefinementPullback out;
  out.total = std::make_shared<TablePolycategory>(std::move(t));
  std::map<ObjectId, ObjectId> ox, oy;
  for (const auto& [xy, pr] : *pairs) {
    ox.emplace(xy, pr.first);
    oy.emplace(xy, pr.second);
  }
  std::map<PolyMap, PolyMap> mx, my;
  for (const auto& [fg, pr] : *maps) {
    mx.emplace(fg, pr.first);
    my.emplace(fg, pr.second);
  }
  out.to_source = std::make_shared<PolyFunctor>(
      PolyFunctor::from_tables("pr1", out.total, p.source_ptr(), std::move(ox), std::move(mx)));
  out.to_base = std::make_shared<PolyFunctor>(
      PolyFunctor::from_tables("pr2", out.total, s.source_ptr(), std::move(oy), std::move(my)));

  FibrationContext ce(p), ct(*out.to_base);
  const Scope& base2 = ct.base();
  for (std::size_t f = 0; f < base2.size(); ++f) {
    const PolyMap& fm = base2.at(f);
    if (!ct.source().in_bound(fm.boundary)) continue;
    PolyMap sf = s(fm);
    if (!ce.base().find(sf)) continue;
    const auto& d = fm.dom();
    const auto& c = fm.cod();
    for (std::size_t j = 0; j < d.size(); ++j) {
      for (const auto& pi1 : ct.fibre_tuples(ObjectList(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(j))))
        for (const auto& pi2 : ct.fibre_tuples(ObjectList(d.begin() + static_cast<std::ptrdiff_t>(j) + 1, d.end())))
          for (const auto& sigma : ct.fibre_tuples(c)) {
            if (!pullback_exists(ce, sf, j, project(pi1, *pairs, true), project(pi2, *pairs, true),
                                 project(sigma, *pairs, true)))
              continue;
            ++out.checked;
            if (!pullback_exists(ct, fm, j, pi1, pi2, sigma))
              out.failures.push_back("pullback of " + to_string(fm) + " at in:" + std::to_string(j) +
                                     " exists in " + e.name() + " but not in the pullback");
          }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (const auto& pi : ct.fibre_tuples(d))
        for (const auto& s1 : ct.fibre_tuples(ObjectList(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i))))
          for (const auto& s2 : ct.fibre_tuples(ObjectList(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, c.end()))) {
            if (!pushforward_exists(ce, sf, i, project(pi, *pairs, true), project(s1, *pairs, true),
                                    project(s2, *pairs, true)))
              continue;
            ++out.checked;
            if (!pushforward_exists(ct, fm, i, pi, s1, s2))
              out.failures.push_back("pushforward of " + to_string(fm) + " at out:" + std::to_string(i) +
                                     " exists in " + e.name() + " but not in the pullback");
          }
    }
  }
  std::sort(out.failures.begin(), out.failures.end());
  return out;
}

}  // namespace polycat
