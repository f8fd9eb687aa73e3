#include "polycat/distributor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "polycat/error.hpp"

namespace polycat {
namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<std::size_t>> all_tuples(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (auto n : sizes) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : out)
      for (std::size_t k = 0; k < n; ++k) {
        auto u = t;
        u.push_back(k);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> sizes_of(const std::vector<CatPtr>& cs) {
  std::vector<std::size_t> s;
  for (const auto& c : cs) s.push_back(c->object_count());
  return s;
}

bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || a->name() == b->name(); }

std::string tuple_text(const FinDistributor& d, const std::vector<std::size_t>& outs, const std::vector<std::size_t>& ins) {
  std::string s = "(";
  for (std::size_t k = 0; k < outs.size(); ++k) s += (k ? "," : "") + d.outputs()[k]->objects()[outs[k]].name;
  s += " ; ";
  for (std::size_t k = 0; k < ins.size(); ++k) s += (k ? "," : "") + d.inputs()[k]->objects()[ins[k]].name;
  return s + ")";
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index stays the root, so roots are the least members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

const CatPtr& FinDistributor::category(const Position& var) const {
  if (var.side == Side::In) {
    if (var.index >= inputs_.size()) fail(ErrorCode::IndexOutOfRange, "input variable " + std::to_string(var.index));
    return inputs_[var.index];
  }
  if (var.index >= outputs_.size()) fail(ErrorCode::IndexOutOfRange, "output variable " + std::to_string(var.index));
  return outputs_[var.index];
}

std::size_t FinDistributor::slot(const Position& var) const {
  category(var);
  return var.side == Side::In ? var.index : inputs_.size() + var.index;
}

const std::vector<std::size_t>& FinDistributor::at(const std::vector<std::size_t>& outs,
                                                   const std::vector<std::size_t>& ins) const {
  static const std::vector<std::size_t> empty;
  auto it = tuples_.find({outs, ins});
  return it == tuples_.end() ? empty : it->second;
}

std::optional<std::size_t> FinDistributor::find(const std::vector<std::size_t>& outs,
                                                const std::vector<std::size_t>& ins, const std::string& name) const {
  for (auto k : at(outs, ins))
    if (elements_[k].name == name) return k;
  return std::nullopt;
}

bool FinDistributor::applies(const Position& var, std::size_t morphism, std::size_t element) const {
  return actions_[slot(var)][morphism][element] != npos;
}

std::size_t FinDistributor::act(const Position& var, std::size_t morphism, std::size_t element) const {
  std::size_t r = actions_[slot(var)][morphism][element];
  if (r == npos)
    fail(ErrorCode::TypeMismatch, category(var)->morphism(morphism).id + " does not act on " + elements_[element].name);
  return r;
}

FinDistributor FinDistributor::with_action(const Position& var, std::size_t morphism, std::size_t element,
                                           std::size_t image) const {
  FinDistributor d = *this;
  d.actions_[slot(var)][morphism][element] = image;
  return d;
}

FinDistributor FinDistributor::tabulate(std::string name, std::vector<CatPtr> inputs, std::vector<CatPtr> outputs,
                                        const ElementsFn& elements, const ActFn& act) {
  FinDistributor d;
  d.name_ = std::move(name);
  d.inputs_ = std::move(inputs);
  d.outputs_ = std::move(outputs);
  for (const auto& outs : all_tuples(sizes_of(d.outputs_)))
    for (const auto& ins : all_tuples(sizes_of(d.inputs_))) {
      auto names = elements(outs, ins);
      if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
        fail(ErrorCode::InvariantError, d.name_ + ": duplicate element at " + tuple_text(d, outs, ins));
      auto& slot = d.tuples_[{outs, ins}];
      for (auto& n : names) {
        slot.push_back(d.elements_.size());
        d.elements_.push_back(DistElement{std::move(n), outs, ins});
      }
    }
  const std::size_t m = d.inputs_.size();
  d.actions_.resize(m + d.outputs_.size());
  for (std::size_t s = 0; s < d.actions_.size(); ++s) {
    Position var = s < m ? Position{Side::In, s} : Position{Side::Out, s - m};
    const auto& cat = *d.category(var);
    d.actions_[s].assign(cat.morphisms().size(), std::vector<std::size_t>(d.elements_.size(), npos));
    for (std::size_t mo = 0; mo < cat.morphisms().size(); ++mo) {
      const auto& mm = cat.morphism(mo);
      for (std::size_t x = 0; x < d.elements_.size(); ++x) {
        const auto& el = d.elements_[x];
        auto outs = el.outs;
        auto ins = el.ins;
        if (var.side == Side::In) {
          if (ins[var.index] != mm.target) continue;
          ins[var.index] = mm.source;
        } else {
          if (outs[var.index] != mm.source) continue;
          outs[var.index] = mm.target;
        }
        std::string img = act(var, mo, el);
        auto y = d.find(outs, ins, img);
        if (!y)
          fail(ErrorCode::InvariantError, d.name_ + ": action of " + mm.id + " on " + el.name + " gives unknown element " + img);
        d.actions_[s][mo][x] = *y;
      }
    }
  }
  d.check();
  return d;
}

void FinDistributor::check() const {
  const std::size_t m = inputs_.size();
  for (std::size_t s = 0; s < actions_.size(); ++s) {
    Position var = s < m ? Position{Side::In, s} : Position{Side::Out, s - m};
    const auto& cat = *category(var);
    for (std::size_t x = 0; x < elements_.size(); ++x) {
      std::size_t obj = var.side == Side::In ? elements_[x].ins[var.index] : elements_[x].outs[var.index];
      if (actions_[s][cat.identity(obj)][x] != x)
        fail(ErrorCode::InvariantError, name_ + ": identity does not act trivially on " + elements_[x].name);
    }
    for (const auto& [gf, c] : cat.table()) {
      const auto [g, f] = gf;
      for (std::size_t x = 0; x < elements_.size(); ++x) {
        if (var.side == Side::Out) {
          // (g after f) acts as f then g.
          if (actions_[s][f][x] == npos) continue;
          if (actions_[s][c][x] != actions_[s][g][actions_[s][f][x]])
            fail(ErrorCode::InvariantError, name_ + ": output action not functorial at " + cat.morphism(g).id + "." + cat.morphism(f).id);
        } else {
          // contravariant: (g after f) acts as g then f.
          if (actions_[s][g][x] == npos) continue;
          if (actions_[s][c][x] != actions_[s][f][actions_[s][g][x]])
            fail(ErrorCode::InvariantError, name_ + ": input action not functorial at " + cat.morphism(g).id + "." + cat.morphism(f).id);
        }
      }
    }
  }
  for (std::size_t s = 0; s < actions_.size(); ++s)
    for (std::size_t t = s + 1; t < actions_.size(); ++t)
      for (std::size_t a = 0; a < actions_[s].size(); ++a)
        for (std::size_t b = 0; b < actions_[t].size(); ++b)
          for (std::size_t x = 0; x < elements_.size(); ++x) {
            std::size_t ax = actions_[s][a][x], bx = actions_[t][b][x];
            if (ax == npos || bx == npos) continue;
            if (actions_[t][b][ax] != actions_[s][a][bx])
              fail(ErrorCode::InvariantError, name_ + ": actions in different variables do not commute on " + elements_[x].name);
          }
}

FinDistributor hom_distributor(const CatPtr& c) {
  return FinDistributor::tabulate(
      "hom(" + c->name() + ")", {c}, {c},
      [&](const std::vector<std::size_t>& outs, const std::vector<std::size_t>& ins) {
        std::vector<std::string> names;
        for (auto m : c->hom(ins[0], outs[0])) names.push_back(c->morphism(m).id);
        return names;
      },
      [&](const Position& var, std::size_t mo, const DistElement& x) {
        std::size_t e = c->morphism_index(x.name);
        return c->morphism(var.side == Side::Out ? c->compose(mo, e) : c->compose(e, mo)).id;
      });
}

DistributorComposite compose_distributors(const FinDistributor& p, std::size_t i, const FinDistributor& q,
                                          std::size_t j) {
  if (i >= p.outputs().size()) fail(ErrorCode::IndexOutOfRange, "output variable " + std::to_string(i) + " of " + p.name());
  if (j >= q.inputs().size()) fail(ErrorCode::IndexOutOfRange, "input variable " + std::to_string(j) + " of " + q.name());
  const CatPtr& cut = p.outputs()[i];
  if (!same_category(cut, q.inputs()[j]))
    fail(ErrorCode::BoundaryMismatch, "cut categories " + cut->name() + " and " + q.inputs()[j]->name() + " differ");
  const std::size_t np = p.outputs().size(), mq = q.inputs().size();
  if (i > 0 && j > 0) fail(ErrorCode::PlanarityViolation, "left contexts of both " + p.name() + " and " + q.name() + " are nonempty");
  if (i + 1 < np && j + 1 < mq)
    fail(ErrorCode::PlanarityViolation, "right contexts of both " + p.name() + " and " + q.name() + " are nonempty");

  // Matching pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      if (p.element(a).outs[i] == q.element(b).ins[j]) {
        pair_index[{a, b}] = pairs.size();
        pairs.emplace_back(a, b);
      }
  UnionFind uf(pairs.size());
  const Position pout{Side::Out, i}, qin{Side::In, j};
  for (std::size_t a = 0; a < p.size(); ++a) {
    const std::size_t r = p.element(a).outs[i];
    for (std::size_t mo = 0; mo < cut->morphisms().size(); ++mo) {
      if (cut->morphism(mo).source != r) continue;
      const std::size_t a2 = p.act(pout, mo, a);
      for (std::size_t b = 0; b < q.size(); ++b) {
        if (q.element(b).ins[j] != cut->morphism(mo).target) continue;
        const std::size_t b2 = q.act(qin, mo, b);
        uf.unite(pair_index.at({a2, b}), pair_index.at({a, b2}));
      }
    }
  }

  std::vector<CatPtr> ins(q.inputs().begin(), q.inputs().begin() + static_cast<std::ptrdiff_t>(j));
  ins.insert(ins.end(), p.inputs().begin(), p.inputs().end());
  ins.insert(ins.end(), q.inputs().begin() + static_cast<std::ptrdiff_t>(j) + 1, q.inputs().end());
  std::vector<CatPtr> outs(p.outputs().begin(), p.outputs().begin() + static_cast<std::ptrdiff_t>(i));
  outs.insert(outs.end(), q.outputs().begin(), q.outputs().end());
  outs.insert(outs.end(), p.outputs().begin() + static_cast<std::ptrdiff_t>(i) + 1, p.outputs().end());

  const std::size_t pin = p.inputs().size(), qout = q.outputs().size();
  auto tuple_of = [&](std::size_t k) {
    const auto& x = p.element(pairs[k].first);
    const auto& y = q.element(pairs[k].second);
    std::vector<std::size_t> so(x.outs.begin(), x.outs.begin() + static_cast<std::ptrdiff_t>(i));
    so.insert(so.end(), y.outs.begin(), y.outs.end());
    so.insert(so.end(), x.outs.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.outs.end());
    std::vector<std::size_t> si(y.ins.begin(), y.ins.begin() + static_cast<std::ptrdiff_t>(j));
    si.insert(si.end(), x.ins.begin(), x.ins.end());
    si.insert(si.end(), y.ins.begin() + static_cast<std::ptrdiff_t>(j) + 1, y.ins.end());
    return std::make_pair(so, si);
  };
  auto class_name = [&](std::size_t root) {
    return "<" + p.element(pairs[root].first).name + "|" + q.element(pairs[root].second).name + ">";
  };
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::vector<std::string>> names;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (uf.find(k) == k) names[tuple_of(k)].push_back(class_name(k));
  std::map<std::pair<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::string>, std::size_t> root_of;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (uf.find(k) == k) root_of[{tuple_of(k), class_name(k)}] = k;

  auto result = std::make_shared<FinDistributor>(FinDistributor::tabulate(
      "(" + q.name() + ")o(" + p.name() + ")", ins, outs,
      [&](const std::vector<std::size_t>& so, const std::vector<std::size_t>& si) {
        auto it = names.find({so, si});
        return it == names.end() ? std::vector<std::string>{} : it->second;
      },
      [&](const Position& var, std::size_t mo, const DistElement& x) {
        auto [a, b] = pairs[root_of.at({{x.outs, x.ins}, x.name})];
        if (var.side == Side::In) {
          if (var.index < j)
            b = q.act({Side::In, var.index}, mo, b);
          else if (var.index < j + pin)
            a = p.act({Side::In, var.index - j}, mo, a);
          else
            b = q.act({Side::In, var.index - pin + 1}, mo, b);
        } else {
          if (var.index < i)
            a = p.act({Side::Out, var.index}, mo, a);
          else if (var.index < i + qout)
            b = q.act({Side::Out, var.index - i}, mo, b);
          else
            a = p.act({Side::Out, var.index - qout + 1}, mo, a);
        }
        return class_name(uf.find(pair_index.at({a, b})));
      }));

  DistributorComposite out;
  out.result = result;
  std::map<std::size_t, std::size_t> element_of_root;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::size_t root = uf.find(k);
    auto it = element_of_root.find(root);
    if (it == element_of_root.end()) {
      auto [so, si] = tuple_of(root);
      it = element_of_root.emplace(root, *result->find(so, si, class_name(root))).first;
    }
    out.class_of[pairs[k]] = it->second;
  }
  out.representative.resize(result->size());
  for (const auto& [root, e] : element_of_root) out.representative[e] = pairs[root];
  return out;
}

std::vector<std::string> check_distributor_map(const FinDistributor& a, const FinDistributor& b,
                                               const std::vector<std::size_t>& map, bool bijective) {
  std::vector<std::string> failures;
  if (a.inputs().size() != b.inputs().size() || a.outputs().size() != b.outputs().size()) {
    failures.push_back("boundaries differ");
    return failures;
  }
  for (std::size_t k = 0; k < a.inputs().size(); ++k)
    if (!same_category(a.inputs()[k], b.inputs()[k])) failures.push_back("input category " + std::to_string(k) + " differs");
  for (std::size_t k = 0; k < a.outputs().size(); ++k)
    if (!same_category(a.outputs()[k], b.outputs()[k])) failures.push_back("output category " + std::to_string(k) + " differs");
  if (!failures.empty()) return failures;
  if (map.size() != a.size()) {
    failures.push_back("map is not total");
    return failures;
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (map[x] >= b.size()) {
      failures.push_back(a.element(x).name + " maps outside the target");
      continue;
    }
    const auto& ex = a.element(x);
    const auto& ey = b.element(map[x]);
    if (ex.outs != ey.outs || ex.ins != ey.ins) failures.push_back(ex.name + " changes boundary tuple");
  }
  if (!failures.empty()) return failures;
  for (int side = 0; side < 2; ++side) {
    const auto& cats = side == 0 ? a.inputs() : a.outputs();
    for (std::size_t v = 0; v < cats.size(); ++v) {
      Position var{side == 0 ? Side::In : Side::Out, v};
      for (std::size_t mo = 0; mo < cats[v]->morphisms().size(); ++mo)
        for (std::size_t x = 0; x < a.size(); ++x) {
          if (!a.applies(var, mo, x)) continue;
          if (map[a.act(var, mo, x)] != b.act(var, mo, map[x]))
            failures.push_back("action of " + cats[v]->morphism(mo).id + " at " + to_string(var) + " not preserved on " +
                               a.element(x).name);
        }
    }
  }
  if (bijective) {
    std::vector<bool> hit(b.size(), false);
    for (auto y : map) {
      if (hit[y]) failures.push_back("not injective at " + b.element(y).name);
      hit[y] = true;
    }
    for (std::size_t y = 0; y < b.size(); ++y)
      if (!hit[y]) failures.push_back("not surjective at " + b.element(y).name);
  }
  std::sort(failures.begin(), failures.end());
  return failures;
}

std::optional<std::string> representability_failure(const FinDistributor& d, const Position& var) {
  const CatPtr& c = d.category(var);
  auto out_sizes = sizes_of(d.outputs());
  auto in_sizes = sizes_of(d.inputs());
  const bool in = var.side == Side::In;
  (in ? in_sizes : out_sizes)[var.index] = 1;  // placeholder, overwritten below
  for (const auto& outs0 : all_tuples(out_sizes))
    for (const auto& ins0 : all_tuples(in_sizes)) {
      bool represented = false;
      for (std::size_t g = 0; g < c->object_count() && !represented; ++g) {
        auto outs = outs0, ins = ins0;
        (in ? ins : outs)[var.index] = g;
        for (auto u : d.at(outs, ins)) {
          bool ok = true;
          for (std::size_t r = 0; r < c->object_count() && ok; ++r) {
            auto o2 = outs, i2 = ins;
            (in ? i2 : o2)[var.index] = r;
            const auto& target = d.at(o2, i2);
            const auto& homs = in ? c->hom(r, g) : c->hom(g, r);
            if (homs.size() != target.size()) {
              ok = false;
              break;
            }
            std::set<std::size_t> seen;
            for (auto mo : homs) seen.insert(d.act(var, mo, u));
            if (seen.size() != target.size()) ok = false;
          }
          if (ok) {
            represented = true;
            break;
          }
        }
      }
      if (!represented) {
        auto outs = outs0, ins = ins0;
        std::string s = "(";
        for (std::size_t k = 0; k < outs.size(); ++k)
          s += (k ? "," : "") + ((!in && k == var.index) ? std::string("-") : d.outputs()[k]->objects()[outs[k]].name);
        s += " ; ";
        for (std::size_t k = 0; k < ins.size(); ++k)
          s += (k ? "," : "") + ((in && k == var.index) ? std::string("-") : d.inputs()[k]->objects()[ins[k]].name);
        return s + ")";
      }
    }
  return std::nullopt;
}

}  // namespace polycat
