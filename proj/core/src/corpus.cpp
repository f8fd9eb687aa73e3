#include "polycat/corpus.hpp"

#include <algorithm>
#include <random>

#include "polycat/error.hpp"

namespace polycat {
namespace {

MonoidPresentation table_presentation(std::string name, std::vector<std::string> elements, std::string unit,
                                      const std::function<std::size_t(std::size_t, std::size_t)>& mult) {
  MonoidPresentation m{std::move(name), elements, std::move(unit), {}};
  for (std::size_t a = 0; a < elements.size(); ++a) {
    m.mult.emplace_back();
    for (std::size_t b = 0; b < elements.size(); ++b) m.mult.back().push_back(elements[mult(a, b)]);
  }
  return m;
}

// Checked multiplication over element indices.
struct Labels {
  std::shared_ptr<MonoidPolycategory> checked;
  explicit Labels(const MonoidPresentation& m) : checked(from_monoid(m, 1)) {}
  const std::vector<std::string>& elements() const { return checked->elements(); }
  std::string unit() const { return checked->elements()[checked->unit()]; }
  std::string mult(const std::string& a, const std::string& b) const {
    return checked->elements()[checked->mult(checked->element_index(a), checked->element_index(b))];
  }
};

ObjectId colour_name(std::size_t base, std::size_t k) {
  return ObjectId(std::string(1, static_cast<char>('X' + base)) + std::to_string(k));
}

}  // namespace

MonoidPresentation cyclic_group(std::size_t n) {
  std::vector<std::string> e;
  for (std::size_t k = 0; k < n; ++k) e.push_back(std::to_string(k));
  return table_presentation("Z/" + std::to_string(n), e, "0", [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

MonoidPresentation bool_monoid() {
  return table_presentation("Bool", {"0", "1"}, "1", [](std::size_t a, std::size_t b) { return a & b; });
}

MonoidPresentation klein_group() {
  return table_presentation("Z/2xZ/2", {"00", "01", "10", "11"}, "00", [](std::size_t a, std::size_t b) { return a ^ b; });
}

std::shared_ptr<TablePolycategory> identities_only(const ObjectList& objects, std::size_t bound) {
  std::string name = "identities(";
  for (std::size_t k = 0; k < objects.size(); ++k) name += (k ? "," : "") + objects[k].name;
  name += ")";
  auto t = TablePolycategory::tabulate(
      name, objects, bound,
      [](const Boundary& b) {
        if (b.domain.size() == 1 && b.codomain.size() == 1 && b.domain[0] == b.codomain[0])
          return std::vector<PolyMap>{PolyMap{"id", b}};
        return std::vector<PolyMap>{};
      },
      [](const ObjectId& a) { return PolyMap{"id", Boundary{{a}, {a}}}; },
      [](const CompositionRequest& r) { return r.f.id == "id" && r.f.dom().size() == 1 ? r.g : r.f; });
  return std::make_shared<TablePolycategory>(std::move(t));
}

std::shared_ptr<TablePolycategory> unary_monoid(const MonoidPresentation& m) {
  Labels labels(m);
  const ObjectId s = MonoidPolycategory::star();
  auto t = TablePolycategory::tabulate(
      "unary(" + m.name + ")", {s}, 1,
      [&](const Boundary& b) {
        std::vector<PolyMap> out;
        if (b.domain.size() == 1 && b.codomain.size() == 1)
          for (const auto& e : labels.elements()) out.push_back(PolyMap{e, b});
        return out;
      },
      [&](const ObjectId& a) { return PolyMap{labels.unit(), Boundary{{a}, {a}}}; },
      [&](const CompositionRequest& r) {
        return PolyMap{labels.mult(r.f.id, r.g.id), composite_boundary(r.f.boundary, r.i, r.g.boundary, r.j)};
      });
  return std::make_shared<TablePolycategory>(std::move(t));
}

std::shared_ptr<TablePolycategory> graded_polycat(const GradedPresentation& g) {
  Labels labels(g.monoid);
  if (g.modulus < 0) fail(ErrorCode::InvariantError, "modulus must be non-negative");
  std::map<ObjectId, long> degree;
  ObjectList objects;
  for (const auto& c : g.colours) {
    if (!degree.emplace(c.name, c.degree).second) fail(ErrorCode::InvariantError, "duplicate colour " + c.name.name);
    objects.push_back(c.name);
  }
  auto balanced = [&](const Boundary& b) {
    long s = 0;
    for (const auto& o : b.codomain) s += degree.at(o);
    for (const auto& o : b.domain) s -= degree.at(o);
    return g.modulus == 0 ? s == 0 : s % g.modulus == 0;
  };
  auto t = TablePolycategory::tabulate(
      g.name, objects, g.bound,
      [&](const Boundary& b) {
        std::vector<PolyMap> out;
        if (balanced(b))
          for (const auto& e : labels.elements()) out.push_back(PolyMap{e, b});
        return out;
      },
      [&](const ObjectId& a) { return PolyMap{labels.unit(), Boundary{{a}, {a}}}; },
      [&](const CompositionRequest& r) {
        return PolyMap{labels.mult(r.f.id, r.g.id), composite_boundary(r.f.boundary, r.i, r.g.boundary, r.j)};
      });
  return std::make_shared<TablePolycategory>(std::move(t));
}

PolyFunctor relabel_functor(std::string name, PolycatPtr source, PolycatPtr target,
                            std::map<ObjectId, ObjectId> colours, std::map<std::string, std::string> labels) {
  auto cs = std::make_shared<std::map<ObjectId, ObjectId>>(std::move(colours));
  auto ls = std::make_shared<std::map<std::string, std::string>>(std::move(labels));
  auto obj = [cs](const ObjectId& a) {
    auto it = cs->find(a);
    if (it == cs->end()) fail(ErrorCode::UnknownObject, "no image for colour '" + a.name + "'");
    return it->second;
  };
  return PolyFunctor(std::move(name), std::move(source), std::move(target), obj, [obj, ls](const PolyMap& f) {
    auto it = ls->find(f.id);
    if (it == ls->end()) fail(ErrorCode::UnknownPolymap, "no image for label '" + f.id + "'");
    PolyMap m{it->second, {}};
    for (const auto& o : f.dom()) m.boundary.domain.push_back(obj(o));
    for (const auto& o : f.cod()) m.boundary.codomain.push_back(obj(o));
    return m;
  });
}

PolyFunctor bool_to_terminal(std::size_t bound) {
  const ObjectId s = MonoidPolycategory::star();
  return relabel_functor("Bool->terminal", from_monoid(bool_monoid(), bound), terminal(bound), {{s, s}},
                         {{"0", "!"}, {"1", "!"}});
}

MonoidAction bool_action() {
  // 0 collapses everything onto p.
  return {bool_monoid(), {"p", "q", "r"}, {{"p", "p"}, {"p", "q"}, {"p", "r"}}};
}

LaxNormalFunctor action_functor(const MonoidAction& a) {
  Labels labels(a.monoid);
  const auto& elems = labels.elements();
  auto act = [&](std::size_t x, const std::string& m) {
    std::size_t e = labels.checked->element_index(m);
    const auto& y = a.action.at(x).at(e);
    auto it = std::find(a.set.begin(), a.set.end(), y);
    if (it == a.set.end()) fail(ErrorCode::InvariantError, "action leaves the set at " + y);
    return static_cast<std::size_t>(it - a.set.begin());
  };
  for (std::size_t x = 0; x < a.set.size(); ++x) {
    if (act(x, labels.unit()) != x) fail(ErrorCode::InvariantError, "unit does not act trivially on " + a.set[x]);
    for (const auto& m : elems)
      for (const auto& n : elems)
        if (act(act(x, m), n) != act(x, labels.mult(m, n))) fail(ErrorCode::InvariantError, "not an action at " + a.set[x]);
  }

  LaxNormalFunctor out;
  out.name = "presheaf(" + a.monoid.name + ")";
  out.base = unary_monoid(a.monoid);
  const ObjectId s = MonoidPolycategory::star();
  ObjectList objs(a.set.begin(), a.set.end());
  auto cat = std::make_shared<FinCategory>(FinCategory::discrete("set(" + a.monoid.name + ")", objs));
  out.fibres[s] = cat;
  for (const auto& m : out.base->polymaps()) {
    out.dists[m] = std::make_shared<FinDistributor>(FinDistributor::tabulate(
        "presheaf(" + m.id + ")", {cat}, {cat},
        [&](const std::vector<std::size_t>& outs, const std::vector<std::size_t>& ins) {
          return act(outs[0], m.id) == ins[0] ? std::vector<std::string>{"*"} : std::vector<std::string>{};
        },
        [](const Position&, std::size_t, const DistElement&) { return std::string("*"); }));
  }
  const auto& id = *out.dists.at(out.base->identity(s));
  std::vector<std::size_t> norm;
  for (const auto& x : id.elements()) norm.push_back(cat->identity(x.ins[0]));
  out.normality[s] = norm;
  for (const auto& f : out.base->polymaps())
    for (const auto& g : out.base->polymaps()) {
      const auto& df = *out.dists.at(f);
      const auto& dg = *out.dists.at(g);
      const auto& dc = *out.dists.at(out.base->compose({f, 0, g, 0}));
      auto& t = out.mu[{f, 0, g, 0}];
      for (std::size_t x = 0; x < df.size(); ++x)
        for (std::size_t y = 0; y < dg.size(); ++y)
          if (df.element(x).outs[0] == dg.element(y).ins[0]) {
            auto z = dc.find(dg.element(y).outs, df.element(x).ins, "*");
            if (!z) fail(ErrorCode::InvariantError, "action is not compatible with composition");
            t[{x, y}] = *z;
          }
    }
  return out;
}

namespace {

GradedCase make_case(std::string description, const GradedPresentation& total, PolycatPtr base,
                     std::map<ObjectId, ObjectId> colours, std::map<std::string, std::string> labels) {
  GradedCase c;
  c.description = std::move(description);
  c.total = graded_polycat(total);
  c.base = std::move(base);
  c.projection = std::make_shared<PolyFunctor>(
      relabel_functor(total.name + "->" + c.base->name(), c.total, c.base, std::move(colours), std::move(labels)));
  c.functor = fibres_functor(*c.projection);
  return c;
}

std::map<std::string, std::string> collapse_labels(const MonoidPresentation& m, const std::string& to) {
  std::map<std::string, std::string> out;
  for (const auto& e : m.elements) out[e] = to;
  return out;
}

}  // namespace

GradedCase nonrepresentable_case() {
  GradedPresentation g{"graded(a:0,b:1;Z)", {{"a", 0}, {"b", 1}}, 0, cyclic_group(1), 2};
  const ObjectId s = MonoidPolycategory::star();
  return make_case("integer degrees a:0 b:1 over terminal", g, terminal(2), {{"a", s}, {"b", s}},
                   collapse_labels(g.monoid, "!"));
}

GradedCase representable_terminal_case() {
  GradedPresentation g{"graded(a:0,b:1;Z/2,Z/2)", {{"a", 0}, {"b", 1}}, 2, cyclic_group(2), 2};
  const ObjectId s = MonoidPolycategory::star();
  return make_case("degrees mod 2 a:0 b:1, labels Z/2, over terminal", g, terminal(2), {{"a", s}, {"b", s}},
                   collapse_labels(g.monoid, "!"));
}

GradedCase random_graded_case(std::uint64_t seed, bool representable) {
  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  struct LabelChoice {
    MonoidPresentation total, base;
    bool identity;  // otherwise everything collapses onto the base unit
  };
  std::vector<LabelChoice> choices;
  if (representable) {
    choices = {{cyclic_group(1), cyclic_group(1), false}, {cyclic_group(2), cyclic_group(1), false},
               {cyclic_group(3), cyclic_group(1), false}, {cyclic_group(2), cyclic_group(2), true},
               {cyclic_group(3), cyclic_group(3), true}};
  } else {
    choices = {{bool_monoid(), cyclic_group(1), false}, {bool_monoid(), bool_monoid(), true},
               {cyclic_group(2), cyclic_group(1), false}};
  }
  const auto& lc = choices[static_cast<std::size_t>(pick(0, static_cast<long>(choices.size()) - 1))];

  const std::size_t nb = static_cast<std::size_t>(pick(1, 2));
  const long kb = pick(1, 2);
  GradedPresentation base{"", {}, kb, lc.base, 2};
  GradedPresentation total{"", {}, representable ? kb : 0, lc.total, 2};
  std::map<ObjectId, ObjectId> colours;
  std::size_t budget = 3;
  for (std::size_t b = 0; b < nb; ++b) {
    const long d = pick(0, kb - 1);
    ObjectId bn(std::string(1, static_cast<char>('A' + b)));
    base.colours.push_back({bn, d});
    const std::size_t room = budget - (nb - 1 - b);
    const std::size_t n = static_cast<std::size_t>(pick(1, static_cast<long>(std::min<std::size_t>(room, 2))));
    budget -= n;
    for (std::size_t k = 0; k < n; ++k) {
      // Without representability the total degrees live in the integers, so
      // a second colour of another degree has nothing to cancel against.
      const long t = representable ? pick(0, 1) : static_cast<long>(k);
      total.colours.push_back({colour_name(b, k), d + kb * t});
      colours[total.colours.back().name] = bn;
    }
  }
  auto describe = [](const GradedPresentation& g) {
    std::string s = "(";
    for (std::size_t k = 0; k < g.colours.size(); ++k)
      s += (k ? "," : "") + g.colours[k].name.name + ":" + std::to_string(g.colours[k].degree);
    return s + ";" + (g.modulus == 0 ? std::string("Z") : "Z/" + std::to_string(g.modulus)) + "," + g.monoid.name + ")";
  };
  base.name = "graded" + describe(base);
  total.name = "graded" + describe(total);
  std::map<std::string, std::string> labels;
  for (const auto& e : lc.total.elements) labels[e] = lc.identity ? e : lc.base.unit;
  return make_case("seed " + std::to_string(seed) + ": " + total.name + " over " + base.name, total,
                   graded_polycat(base), std::move(colours), std::move(labels));
}

}  // namespace polycat
