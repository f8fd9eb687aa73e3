#include "polycat/lax_functor.hpp"

#include <algorithm>
#include <sstream>

#include "polycat/axioms.hpp"
#include "polycat/error.hpp"
#include "polycat/scope.hpp"

namespace polycat {
namespace {

using Tuple = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

Tuple composite_tuple(const DistElement& x, std::size_t i, const DistElement& y, std::size_t j) {
  std::vector<std::size_t> outs(x.outs.begin(), x.outs.begin() + static_cast<std::ptrdiff_t>(i));
  outs.insert(outs.end(), y.outs.begin(), y.outs.end());
  outs.insert(outs.end(), x.outs.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.outs.end());
  std::vector<std::size_t> ins(y.ins.begin(), y.ins.begin() + static_cast<std::ptrdiff_t>(j));
  ins.insert(ins.end(), x.ins.begin(), x.ins.end());
  ins.insert(ins.end(), y.ins.begin() + static_cast<std::ptrdiff_t>(j) + 1, y.ins.end());
  return {outs, ins};
}

bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || (a && b && a->name() == b->name()); }

// Elements of a distributor grouped by the object at one variable.
class Grouping {
 public:
  const std::vector<std::vector<std::size_t>>& at(const FinDistributor& d, const Position& var) {
    auto key = std::make_pair(&d, var);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<std::vector<std::size_t>> g(d.category(var)->object_count());
    for (std::size_t x = 0; x < d.size(); ++x) {
      const auto& e = d.element(x);
      g[var.side == Side::In ? e.ins[var.index] : e.outs[var.index]].push_back(x);
    }
    return cache_.emplace(key, std::move(g)).first->second;
  }

 private:
  std::map<std::pair<const FinDistributor*, Position>, std::vector<std::vector<std::size_t>>> cache_;
};

using MuTable = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

class LaxChecker {
 public:
  LaxChecker(const LaxNormalFunctor& f, ElementCheckReport& r) : f_(f), r_(r), s_(*f.base) {}

  void run() {
    if (!structure()) return;
    normality();
    composites();
    units();
    associativity();
  }

 private:
  bool structure() {
    const std::size_t before = r_.failure_count;
    for (const auto& a : s_.polycat().objects()) {
      if (!f_.fibres.count(a)) r_.fail("structure: no fibre over " + a.name);
      if (!f_.normality.count(a)) r_.fail("structure: no normality iso at " + a.name);
    }
    if (r_.failure_count != before) return false;
    for (const auto& m : s_.maps()) {
      ++r_.checked["structure"];
      auto it = f_.dists.find(m);
      if (it == f_.dists.end() || !it->second) {
        r_.fail("structure: no distributor over " + to_string(m));
        continue;
      }
      const auto& d = *it->second;
      bool ok = d.inputs().size() == m.dom().size() && d.outputs().size() == m.cod().size();
      for (std::size_t t = 0; ok && t < m.dom().size(); ++t) ok = same_category(d.inputs()[t], f_.fibres.at(m.dom()[t]));
      for (std::size_t t = 0; ok && t < m.cod().size(); ++t) ok = same_category(d.outputs()[t], f_.fibres.at(m.cod()[t]));
      if (!ok) r_.fail("structure: distributor over " + to_string(m) + " does not match the fibres of its boundary");
    }
    return r_.failure_count == before;
  }

  void normality() {
    for (const auto& a : s_.polycat().objects()) {
      const auto& c = f_.fibres.at(a);
      const auto& d = f_.dist(s_.at(s_.identity(a)));
      const auto& norm = f_.normality.at(a);
      ++r_.checked["normality"];
      if (norm.size() != d.size()) {
        r_.fail("normality at " + a.name + ": not total");
        continue;
      }
      FinDistributor hom = hom_distributor(c);
      std::vector<std::size_t> map(d.size());
      bool ok = true;
      for (std::size_t e = 0; e < d.size() && ok; ++e) {
        if (norm[e] >= c->morphisms().size()) {
          ok = false;
          break;
        }
        const auto& m = c->morphism(norm[e]);
        auto y = hom.find({m.target}, {m.source}, m.id);
        if (!y) ok = false;
        else map[e] = *y;
      }
      if (!ok) {
        r_.fail("normality at " + a.name + ": element sent to a morphism outside the fibre or with the wrong ends");
        continue;
      }
      for (const auto& w : check_distributor_map(d, hom, map, true)) r_.fail("normality at " + a.name + ": " + w);
    }
  }

  const MuTable* table(const CompositionKey& k) {
    auto it = f_.mu.find(k);
    return it == f_.mu.end() ? nullptr : &it->second;
  }

  std::optional<std::size_t> lookup(const MuTable& t, std::size_t x, std::size_t y) {
    auto it = t.find({x, y});
    if (it == t.end()) return std::nullopt;
    return it->second;
  }

  std::string pair_text(const FinDistributor& p, std::size_t x, const FinDistributor& q, std::size_t y) {
    return "(" + p.element(x).name + ", " + q.element(y).name + ")";
  }

  void composites() {
    for (std::size_t f = 0; f < s_.size(); ++f)
      for (std::size_t i = 0; i < s_.at(f).cod().size(); ++i)
        for (std::size_t g = 0; g < s_.size(); ++g)
          for (std::size_t j = 0; j < s_.at(g).dom().size(); ++j) {
            auto gf = s_.compose(f, i, g, j);
            if (gf) composite(f, i, g, j, *gf);
          }
  }

  void composite(std::size_t f, std::size_t i, std::size_t g, std::size_t j, std::size_t gf) {
    CompositionKey key{s_.at(f), i, s_.at(g), j};
    const std::string where = "mu " + to_string(key);
    const auto* t = table(key);
    ++r_.checked["composite"];
    if (!t) {
      r_.fail(where + ": missing");
      return;
    }
    const auto& p = f_.dist(key.f);
    const auto& q = f_.dist(key.g);
    const auto& d = f_.dist(s_.at(gf));
    const auto& cut = p.outputs()[i];
    const auto& qin = grouping_.at(q, {Side::In, j});
    // Totality and tuples.
    bool total = true;
    for (std::size_t x = 0; x < p.size(); ++x)
      for (auto y : qin[p.element(x).outs[i]]) {
        auto z = lookup(*t, x, y);
        if (!z || *z >= d.size()) {
          r_.fail(where + ": undefined on " + pair_text(p, x, q, y));
          total = false;
          continue;
        }
        auto [outs, ins] = composite_tuple(p.element(x), i, q.element(y), j);
        if (d.element(*z).outs != outs || d.element(*z).ins != ins) {
          r_.fail(where + ": " + pair_text(p, x, q, y) + " lands at the wrong tuple");
          total = false;
        }
      }
    if (!total) return;
    // Sliding a morphism across the cut.
    for (std::size_t x = 0; x < p.size(); ++x) {
      const std::size_t r = p.element(x).outs[i];
      for (std::size_t mo = 0; mo < cut->morphisms().size(); ++mo) {
        if (cut->morphism(mo).source != r || cut->is_identity(mo)) continue;
        const std::size_t x2 = p.act({Side::Out, i}, mo, x);
        for (auto y : qin[cut->morphism(mo).target]) {
          const std::size_t y2 = q.act({Side::In, j}, mo, y);
          ++r_.checked["coend"];
          if (t->at({x2, y}) != t->at({x, y2}))
            r_.fail(where + ": not constant on the coend class of " + pair_text(p, x2, q, y) + " ~ " +
                    pair_text(p, x, q, y2));
        }
      }
    }
    // Naturality in every context variable of the composite.
    const std::size_t pin = p.inputs().size(), qout = q.outputs().size();
    for (const auto& [xy, z] : *t) {
      const auto [x, y] = xy;
      auto slide = [&](const Position& var, std::size_t mo) -> std::pair<std::size_t, std::size_t> {
        if (var.side == Side::In) {
          if (var.index < j) return {x, q.act({Side::In, var.index}, mo, y)};
          if (var.index < j + pin) return {p.act({Side::In, var.index - j}, mo, x), y};
          return {x, q.act({Side::In, var.index - pin + 1}, mo, y)};
        }
        if (var.index < i) return {p.act({Side::Out, var.index}, mo, x), y};
        if (var.index < i + qout) return {x, q.act({Side::Out, var.index - i}, mo, y)};
        return {p.act({Side::Out, var.index - qout + 1}, mo, x), y};
      };
      for (int side = 0; side < 2; ++side) {
        const auto& cats = side == 0 ? d.inputs() : d.outputs();
        for (std::size_t v = 0; v < cats.size(); ++v) {
          Position var{side == 0 ? Side::In : Side::Out, v};
          for (std::size_t mo = 0; mo < cats[v]->morphisms().size(); ++mo) {
            if (cats[v]->is_identity(mo) || !d.applies(var, mo, z)) continue;
            ++r_.checked["naturality"];
            auto moved = slide(var, mo);
            auto it = t->find(moved);
            if (it == t->end() || it->second != d.act(var, mo, z))
              r_.fail(where + ": not natural in " + to_string(var) + " under " + cats[v]->morphism(mo).id + " at " +
                      pair_text(p, x, q, y));
          }
        }
      }
    }
  }

  void units() {
    for (std::size_t f = 0; f < s_.size(); ++f) {
      const auto& fm = s_.at(f);
      const auto& p = f_.dist(fm);
      for (std::size_t i = 0; i < fm.cod().size(); ++i) {
        const ObjectId& b = fm.cod()[i];
        const std::size_t id = s_.identity(b);
        CompositionKey key{fm, i, s_.at(id), 0};
        if (s_.compose(f, i, id, 0) != f) {
          r_.fail("unit " + to_string(key) + ": base unit law fails");
          continue;
        }
        const auto* t = table(key);
        if (!t) continue;  // reported as missing
        const auto& e = f_.dist(s_.at(id));
        const auto& norm = f_.normality.at(b);
        const auto& ein = grouping_.at(e, {Side::In, 0});
        for (std::size_t x = 0; x < p.size(); ++x)
          for (auto y : ein[p.element(x).outs[i]]) {
            ++r_.checked["unit"];
            auto z = lookup(*t, x, y);
            if (!z || *z != p.act({Side::Out, i}, norm[y], x))
              r_.fail("unit " + to_string(key) + ": triangle fails at " + pair_text(p, x, e, y));
          }
      }
      for (std::size_t j = 0; j < fm.dom().size(); ++j) {
        const ObjectId& a = fm.dom()[j];
        const std::size_t id = s_.identity(a);
        CompositionKey key{s_.at(id), 0, fm, j};
        if (s_.compose(id, 0, f, j) != f) {
          r_.fail("unit " + to_string(key) + ": base unit law fails");
          continue;
        }
        const auto* t = table(key);
        if (!t) continue;
        const auto& e = f_.dist(s_.at(id));
        const auto& norm = f_.normality.at(a);
        const auto& pin = grouping_.at(p, {Side::In, j});
        for (std::size_t x = 0; x < e.size(); ++x)
          for (auto y : pin[e.element(x).outs[0]]) {
            ++r_.checked["unit"];
            auto z = lookup(*t, x, y);
            if (!z || *z != p.act({Side::In, j}, norm[x], y))
              r_.fail("unit " + to_string(key) + ": triangle fails at " + pair_text(e, x, p, y));
          }
      }
    }
  }

  void associativity() {
    for_each_law_instance(s_, [&](const LawInstance& li) {
      const PolyMap& fm = s_.at(li.f);
      const PolyMap& gm = s_.at(li.g);
      const PolyMap& hm = s_.at(li.h);
      std::ostringstream w;
      w << "Eq (" << li.law << ") f=" << to_string(fm) << " i=" << li.i << " g=" << to_string(gm) << " j=" << li.j
        << " h=" << to_string(hm) << " k=" << li.k << " l=" << li.l;
      if (li.lhs != li.rhs) {
        r_.fail(w.str() + ": base instance fails");
        return;
      }
      const auto& p = f_.dist(fm);
      const auto& q = f_.dist(gm);
      const auto& u = f_.dist(hm);
      // Inner and outer tables of both bracketings.
      const MuTable *l1 = nullptr, *l2 = nullptr, *r1 = nullptr, *r2 = nullptr;
      if (li.law == 3) {
        auto gf = *s_.compose(li.f, li.i, li.g, li.j);
        auto hg = *s_.compose(li.g, li.k, li.h, li.l);
        l1 = table({fm, li.i, gm, li.j});
        l2 = table({s_.at(gf), li.i + li.k, hm, li.l});
        r1 = table({gm, li.k, hm, li.l});
        r2 = table({fm, li.i, s_.at(hg), li.l + li.j});
      } else if (li.law == 4) {
        auto hg = *s_.compose(li.g, li.k, li.h, li.l);
        auto hf = *s_.compose(li.f, li.i, li.h, li.j);
        l1 = table({gm, li.k, hm, li.l});
        l2 = table({fm, li.i, s_.at(hg), li.j});
        r1 = table({fm, li.i, hm, li.j});
        r2 = table({gm, li.k, s_.at(hf), li.l - 1 + fm.dom().size()});
      } else {
        auto gf = *s_.compose(li.f, li.i, li.g, li.j);
        auto hf = *s_.compose(li.f, li.k, li.h, li.l);
        l1 = table({fm, li.i, gm, li.j});
        l2 = table({s_.at(gf), li.k - 1 + gm.cod().size(), hm, li.l});
        r1 = table({fm, li.k, hm, li.l});
        r2 = table({s_.at(hf), li.i, gm, li.j});
      }
      if (!l1 || !l2 || !r1 || !r2) return;  // reported as missing
      auto step = [&](const MuTable* t, std::size_t x, std::size_t y) {
        auto z = lookup(*t, x, y);
        return z ? *z : static_cast<std::size_t>(-1);
      };
      const auto* qin = li.law == 4 ? nullptr : &grouping_.at(q, {Side::In, li.j});
      for (std::size_t x = 0; x < p.size(); ++x) {
        const auto& ex = p.element(x);
        if (li.law == 3) {
          for (auto y : (*qin)[ex.outs[li.i]])
            for (auto z : grouping_.at(u, {Side::In, li.l})[q.element(y).outs[li.k]]) {
              ++r_.checked["associativity"];
              auto a = step(l2, step(l1, x, y), z);
              auto b = step(r2, x, step(r1, y, z));
              if (a != b) r_.fail(w.str() + ": differs at " + ex.name + ", " + q.element(y).name + ", " + u.element(z).name);
            }
        } else if (li.law == 4) {
          for (auto z : grouping_.at(u, {Side::In, li.j})[ex.outs[li.i]])
            for (auto y : grouping_.at(q, {Side::Out, li.k})[u.element(z).ins[li.l]]) {
              ++r_.checked["interchange"];
              auto a = step(l2, x, step(l1, y, z));
              auto b = step(r2, y, step(r1, x, z));
              if (a != b) r_.fail(w.str() + ": differs at " + ex.name + ", " + q.element(y).name + ", " + u.element(z).name);
            }
        } else {
          for (auto y : (*qin)[ex.outs[li.i]])
            for (auto z : grouping_.at(u, {Side::In, li.l})[ex.outs[li.k]]) {
              ++r_.checked["interchange"];
              auto a = step(l2, step(l1, x, y), z);
              auto b = step(r2, step(r1, x, z), y);
              if (a != b) r_.fail(w.str() + ": differs at " + ex.name + ", " + q.element(y).name + ", " + u.element(z).name);
            }
        }
      }
    });
  }

  const LaxNormalFunctor& f_;
  ElementCheckReport& r_;
  Scope s_;
  Grouping grouping_;
};

}  // namespace

std::string to_string(const CompositionKey& k) {
  return to_string(k.f) + " out " + std::to_string(k.i) + " into " + to_string(k.g) + " in " + std::to_string(k.j);
}

const FinCategory& LaxNormalFunctor::fibre(const ObjectId& a) const {
  auto it = fibres.find(a);
  if (it == fibres.end()) fail(ErrorCode::UnknownObject, name + ": no fibre over " + a.name);
  return *it->second;
}

const FinDistributor& LaxNormalFunctor::dist(const PolyMap& f) const {
  auto it = dists.find(f);
  if (it == dists.end()) fail(ErrorCode::UnknownPolymap, name + ": no distributor over " + to_string(f));
  return *it->second;
}

std::size_t LaxNormalFunctor::mu_at(const CompositionKey& k, std::size_t x, std::size_t y) const {
  auto it = mu.find(k);
  if (it == mu.end()) fail(ErrorCode::UnknownPolymap, name + ": no laxity component for " + to_string(k));
  auto jt = it->second.find({x, y});
  if (jt == it->second.end()) fail(ErrorCode::TypeMismatch, name + ": elements do not meet at the cut of " + to_string(k));
  return jt->second;
}

void ElementCheckReport::fail(const std::string& what) {
  if (failures.size() < max_listed) failures.push_back(what);
  ++failure_count;
}

std::vector<std::string> ElementCheckReport::lines() const {
  std::vector<std::string> out;
  for (const auto& [k, n] : checked) out.push_back(k + ": " + std::to_string(n) + " checked");
  out.push_back("failures: " + std::to_string(failure_count));
  for (const auto& f : failures) out.push_back("failure: " + f);
  if (failure_count > failures.size()) out.push_back("... " + std::to_string(failure_count - failures.size()) + " more");
  return out;
}

ElementCheckReport check_lax_normal(const LaxNormalFunctor& f) {
  ElementCheckReport r;
  r.subject = f.name;
  LaxChecker(f, r).run();
  return r;
}

LaxNormalFunctor fibres_functor(const PolyFunctor& p) {
  LaxNormalFunctor out;
  out.name = "fibres(" + p.name() + ")";
  out.base = p.target_ptr();
  Scope se(p.source());
  Scope sb(p.target());

  std::vector<std::size_t> image(se.size());
  std::map<std::size_t, std::vector<std::size_t>> over;  // base index -> source indices
  for (std::size_t e = 0; e < se.size(); ++e) {
    auto b = sb.find(p(se.at(e)));
    if (!b) fail(ErrorCode::OutOfBound, p.name() + " sends " + to_string(se.at(e)) + " outside the base bound");
    image[e] = *b;
    over[*b].push_back(e);
  }

  // Fibre categories.
  std::map<ObjectId, std::map<ObjectId, std::size_t>> object_index;
  std::map<ObjectId, std::map<std::size_t, std::size_t>> morphism_of;  // source index -> morphism
  for (const auto& a : p.target().objects()) {
    ObjectList objs;
    for (const auto& s : p.source().objects())
      if (p(s) == a) objs.push_back(s);
    std::sort(objs.begin(), objs.end());
    auto& idx = object_index[a];
    for (std::size_t k = 0; k < objs.size(); ++k) idx[objs[k]] = k;
    std::vector<Morphism> ms;
    auto& mof = morphism_of[a];
    for (auto e : over[sb.identity(a)]) {
      const auto& m = se.at(e);
      if (m.dom().size() != 1 || m.cod().size() != 1) continue;
      mof[e] = ms.size();
      ms.push_back({to_string(m), idx.at(m.dom()[0]), idx.at(m.cod()[0])});
    }
    std::vector<std::size_t> ids;
    for (const auto& s : objs) ids.push_back(mof.at(se.identity(s)));
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
    for (const auto& [e1, m1] : mof)
      for (const auto& [e2, m2] : mof) {
        if (ms[m1].target != ms[m2].source) continue;
        auto c = se.compose(e1, 0, e2, 0);
        if (!c || !mof.count(*c))
          fail(ErrorCode::InvariantError, p.name() + ": fibre composite of " + ms[m1].id + " and " + ms[m2].id + " leaves the fibre");
        comp[{m2, m1}] = mof.at(*c);
      }
    out.fibres[a] = std::make_shared<FinCategory>("fib(" + p.name() + "," + a.name + ")", objs, ms, ids, comp);
  }

  // Distributors.
  for (std::size_t b = 0; b < sb.size(); ++b) {
    const PolyMap& bm = sb.at(b);
    std::vector<CatPtr> ins, outs;
    for (const auto& a : bm.dom()) ins.push_back(out.fibres.at(a));
    for (const auto& a : bm.cod()) outs.push_back(out.fibres.at(a));
    std::map<Tuple, std::vector<std::string>> names;
    for (auto e : over[b]) {
      const auto& m = se.at(e);
      Tuple t;
      for (std::size_t k = 0; k < m.cod().size(); ++k) t.first.push_back(object_index.at(bm.cod()[k]).at(m.cod()[k]));
      for (std::size_t k = 0; k < m.dom().size(); ++k) t.second.push_back(object_index.at(bm.dom()[k]).at(m.dom()[k]));
      names[t].push_back(m.id);
    }
    auto source_map = [&](const DistElement& x) {
      PolyMap m{x.name, {}};
      for (std::size_t k = 0; k < x.ins.size(); ++k) m.boundary.domain.push_back(ins[k]->objects()[x.ins[k]]);
      for (std::size_t k = 0; k < x.outs.size(); ++k) m.boundary.codomain.push_back(outs[k]->objects()[x.outs[k]]);
      return se.index(m);
    };
    auto morphism_source = [&](const ObjectId& a, std::size_t mo) {
      for (const auto& [e, m] : morphism_of.at(a))
        if (m == mo) return e;
      fail(ErrorCode::InvariantError, "unknown fibre morphism");
    };
    out.dists[bm] = std::make_shared<FinDistributor>(FinDistributor::tabulate(
        "fib(" + p.name() + "," + to_string(bm) + ")", ins, outs,
        [&](const std::vector<std::size_t>& o, const std::vector<std::size_t>& i) {
          auto it = names.find({o, i});
          return it == names.end() ? std::vector<std::string>{} : it->second;
        },
        [&](const Position& var, std::size_t mo, const DistElement& x) {
          const std::size_t phi = source_map(x);
          std::optional<std::size_t> r;
          if (var.side == Side::Out)
            r = se.compose(phi, var.index, morphism_source(bm.cod()[var.index], mo), 0);
          else
            r = se.compose(morphism_source(bm.dom()[var.index], mo), 0, phi, var.index);
          if (!r) fail(ErrorCode::InvariantError, p.name() + ": action on " + x.name + " is undefined");
          return se.at(*r).id;
        }));
  }

  for (const auto& a : p.target().objects()) {
    const auto& d = *out.dists.at(sb.at(sb.identity(a)));
    const auto& c = *out.fibres.at(a);
    std::vector<std::size_t> norm;
    for (const auto& x : d.elements()) {
      PolyMap m{x.name, Boundary{{c.objects()[x.ins[0]]}, {c.objects()[x.outs[0]]}}};
      norm.push_back(c.morphism_index(to_string(m)));
    }
    out.normality[a] = std::move(norm);
  }

  auto source_of = [&](const FinDistributor& d, std::size_t x) {
    const auto& el = d.element(x);
    PolyMap m{el.name, {}};
    for (std::size_t k = 0; k < el.ins.size(); ++k) m.boundary.domain.push_back(d.inputs()[k]->objects()[el.ins[k]]);
    for (std::size_t k = 0; k < el.outs.size(); ++k) m.boundary.codomain.push_back(d.outputs()[k]->objects()[el.outs[k]]);
    return se.index(m);
  };
  for (std::size_t f = 0; f < sb.size(); ++f)
    for (std::size_t i = 0; i < sb.at(f).cod().size(); ++i)
      for (std::size_t g = 0; g < sb.size(); ++g)
        for (std::size_t j = 0; j < sb.at(g).dom().size(); ++j) {
          auto gf = sb.compose(f, i, g, j);
          if (!gf) continue;
          const auto& dp = *out.dists.at(sb.at(f));
          const auto& dq = *out.dists.at(sb.at(g));
          const auto& dr = *out.dists.at(sb.at(*gf));
          auto& table = out.mu[{sb.at(f), i, sb.at(g), j}];
          for (std::size_t x = 0; x < dp.size(); ++x)
            for (std::size_t y = 0; y < dq.size(); ++y) {
              if (dp.element(x).outs[i] != dq.element(y).ins[j]) continue;
              auto c = se.compose(source_of(dp, x), i, source_of(dq, y), j);
              if (!c) continue;
              auto [o, in] = composite_tuple(dp.element(x), i, dq.element(y), j);
              auto z = dr.find(o, in, se.at(*c).id);
              if (!z) fail(ErrorCode::InvariantError, p.name() + ": composite " + to_string(se.at(*c)) + " is not over the base composite");
              table[{x, y}] = *z;
            }
        }
  return out;
}

LaxNormalFunctor singleton_functor(const PolycatPtr& base) {
  LaxNormalFunctor out;
  out.name = "singletons(" + base->name() + ")";
  out.base = base;
  Scope s(*base);
  for (const auto& a : base->objects()) {
    out.fibres[a] = std::make_shared<FinCategory>(FinCategory::discrete("pt(" + a.name + ")", {ObjectId("*")}));
    out.normality[a] = {0};
  }
  for (const auto& m : s.maps()) {
    std::vector<CatPtr> ins, outs;
    for (const auto& a : m.dom()) ins.push_back(out.fibres.at(a));
    for (const auto& a : m.cod()) outs.push_back(out.fibres.at(a));
    out.dists[m] = std::make_shared<FinDistributor>(FinDistributor::tabulate(
        "pt(" + to_string(m) + ")", ins, outs,
        [](const std::vector<std::size_t>&, const std::vector<std::size_t>&) { return std::vector<std::string>{"*"}; },
        [](const Position&, std::size_t, const DistElement&) { return std::string("*"); }));
  }
  for (std::size_t f = 0; f < s.size(); ++f)
    for (std::size_t i = 0; i < s.at(f).cod().size(); ++i)
      for (std::size_t g = 0; g < s.size(); ++g)
        for (std::size_t j = 0; j < s.at(g).dom().size(); ++j)
          if (s.compose(f, i, g, j)) out.mu[{s.at(f), i, s.at(g), j}][{0, 0}] = 0;
  return out;
}

}  // namespace polycat
