#include "polycat/axioms.hpp"

#include <algorithm>
#include <sstream>

#include "polycat/scope.hpp"

namespace polycat {

void for_each_law_instance(const Scope& s, const std::function<void(const LawInstance&)>& visit) {
  const std::size_t b = s.bound();
  // (h ∘ g) ∘ f = h ∘ (g ∘ f).
  for (std::size_t f = 0; f < s.size(); ++f) {
    const auto& fm = s.at(f);
    for (std::size_t i = 0; i < fm.cod().size(); ++i)
      for (std::size_t g = 0; g < s.size(); ++g) {
        const auto& gm = s.at(g);
        for (std::size_t j = 0; j < gm.dom().size(); ++j) {
          auto gf = s.compose(f, i, g, j);
          if (!gf) continue;
          const auto& gfm = s.at(*gf);
          for (std::size_t k = 0; k < gm.cod().size(); ++k)
            for (std::size_t m = 1; m <= b; ++m)
              for (std::size_t n = 0; n <= b; ++n) {
                if (gfm.dom().size() + m - 1 > b || gfm.cod().size() + n - 1 > b) continue;
                for (auto h : s.by_shape(m, n)) {
                  const auto& hm = s.at(h);
                  for (std::size_t l = 0; l < hm.dom().size(); ++l) {
                    if (hm.dom()[l] != gm.cod()[k]) continue;
                    auto lhs = s.compose(*gf, i + k, h, l);
                    if (!lhs) continue;
                    auto hg = s.compose(g, k, h, l);
                    if (!hg) continue;
                    auto rhs = s.compose(f, i, *hg, l + j);
                    if (!rhs) continue;
                    visit({3, f, i, g, j, h, k, l, *lhs, *rhs});
                  }
                }
              }
        }
      }
  }
  // h consumes f at input a and g at input b (a < b).
  for (std::size_t h = 0; h < s.size(); ++h) {
    const auto& hm = s.at(h);
    const std::size_t nh = hm.dom().size();
    for (std::size_t a = 0; a < nh; ++a)
      for (std::size_t bb = a + 1; bb < nh; ++bb)
        for (std::size_t f = 0; f < s.size(); ++f) {
          const auto& fm = s.at(f);
          for (std::size_t i = 0; i < fm.cod().size(); ++i) {
            if (fm.cod()[i] != hm.dom()[a]) continue;
            auto hf = s.compose(f, i, h, a);
            if (!hf) continue;
            const auto& hfm = s.at(*hf);
            for (std::size_t m = 0; m <= b; ++m)
              for (std::size_t n = 1; n <= b; ++n) {
                if (hfm.dom().size() + m - 1 > b || hfm.cod().size() + n - 1 > b) continue;
                for (auto g : s.by_shape(m, n)) {
                  const auto& gm = s.at(g);
                  for (std::size_t k = 0; k < gm.cod().size(); ++k) {
                    if (gm.cod()[k] != hm.dom()[bb]) continue;
                    auto rhs = s.compose(g, k, *hf, bb - 1 + fm.dom().size());
                    if (!rhs) continue;
                    auto hg = s.compose(g, k, h, bb);
                    if (!hg) continue;
                    auto lhs = s.compose(f, i, *hg, a);
                    if (!lhs) continue;
                    visit({4, f, i, g, a, h, k, bb, *lhs, *rhs});
                  }
                }
              }
          }
        }
  }
  // f feeds g from output a and h from output b (a < b).
  for (std::size_t f = 0; f < s.size(); ++f) {
    const auto& fm = s.at(f);
    const std::size_t nf = fm.cod().size();
    for (std::size_t a = 0; a < nf; ++a)
      for (std::size_t bb = a + 1; bb < nf; ++bb)
        for (std::size_t g = 0; g < s.size(); ++g) {
          const auto& gm = s.at(g);
          for (std::size_t j = 0; j < gm.dom().size(); ++j) {
            if (gm.dom()[j] != fm.cod()[a]) continue;
            auto gf = s.compose(f, a, g, j);
            if (!gf) continue;
            const auto& gfm = s.at(*gf);
            for (std::size_t m = 1; m <= b; ++m)
              for (std::size_t n = 0; n <= b; ++n) {
                if (gfm.dom().size() + m - 1 > b || gfm.cod().size() + n - 1 > b) continue;
                for (auto h : s.by_shape(m, n)) {
                  const auto& hm = s.at(h);
                  for (std::size_t l = 0; l < hm.dom().size(); ++l) {
                    if (hm.dom()[l] != fm.cod()[bb]) continue;
                    auto lhs = s.compose(*gf, bb - 1 + gm.cod().size(), h, l);
                    if (!lhs) continue;
                    auto hf = s.compose(f, bb, h, l);
                    if (!hf) continue;
                    auto rhs = s.compose(*hf, a, g, j);
                    if (!rhs) continue;
                    visit({5, f, a, g, j, h, bb, l, *lhs, *rhs});
                  }
                }
              }
          }
        }
  }
}

namespace {

std::string str(const Scope& s, std::size_t k) { return to_string(s.at(k)); }

class GermChecker {
 public:
  GermChecker(const Scope& s, AxiomReport& r) : s_(s), r_(r), b_(s.bound()) {}

  void run() {
    units();
    laws();
  }

 private:
  void record(int law, const std::string& w) { r_.counterexamples.push_back({law, w}); }

  void units() {
    for (std::size_t f = 0; f < s_.size(); ++f) {
      const auto& fm = s_.at(f);
      for (std::size_t i = 0; i < fm.cod().size(); ++i) {
        auto r = s_.compose(f, i, s_.identity(fm.cod()[i]), 0);
        ++r_.instances[0];
        if (r != f)
          record(1, "f=" + str(s_, f) + " i=" + std::to_string(i) + " gives " + (r ? str(s_, *r) : "undefined"));
      }
      for (std::size_t j = 0; j < fm.dom().size(); ++j) {
        auto r = s_.compose(s_.identity(fm.dom()[j]), 0, f, j);
        ++r_.instances[1];
        if (r != f)
          record(2, "f=" + str(s_, f) + " j=" + std::to_string(j) + " gives " + (r ? str(s_, *r) : "undefined"));
      }
    }
  }

  void laws() {
    for_each_law_instance(s_, [&](const LawInstance& x) {
      ++r_.instances[x.law - 1];
      if (x.lhs == x.rhs) return;
      std::ostringstream w;
      if (x.law == 3)
        w << "f=" << str(s_, x.f) << " i=" << x.i << " g=" << str(s_, x.g) << " j=" << x.j << " h=" << str(s_, x.h)
          << " k=" << x.k << " l=" << x.l << ": (h∘g)∘f=" << str(s_, x.rhs) << " h∘(g∘f)=" << str(s_, x.lhs);
      else if (x.law == 4)
        w << "h=" << str(s_, x.h) << " a=" << x.j << " b=" << x.l << " f=" << str(s_, x.f) << " i=" << x.i
          << " g=" << str(s_, x.g) << " k=" << x.k << ": g first=" << str(s_, x.lhs) << " f first=" << str(s_, x.rhs);
      else
        w << "f=" << str(s_, x.f) << " a=" << x.i << " b=" << x.k << " g=" << str(s_, x.g) << " j=" << x.j
          << " h=" << str(s_, x.h) << " l=" << x.l << ": g first=" << str(s_, x.lhs) << " h first=" << str(s_, x.rhs);
      record(x.law, w.str());
    });
  }

  const Scope& s_;
  AxiomReport& r_;
  std::size_t b_;
};

// One representative shape per law; composites depend on labels only.
void check_monoid(const MonoidPolycategory& m, AxiomReport& r) {
  const ObjectId& s = MonoidPolycategory::star();
  const std::size_t n = m.elements().size();
  auto map = [&](std::size_t e, std::size_t in, std::size_t out) {
    return PolyMap{m.elements()[e], Boundary{ObjectList(in, s), ObjectList(out, s)}};
  };
  auto label = [&](const PolyMap& f) { return f.id; };
  const PolyMap id = m.identity(s);
  for (std::size_t e = 0; e < n; ++e) {
    PolyMap f = map(e, 2, 2);
    ++r.instances[0];
    if (m.compose({f, 1, id, 0}) != f) r.counterexamples.push_back({1, "f=" + label(f)});
    ++r.instances[1];
    if (m.compose({id, 0, f, 0}) != f) r.counterexamples.push_back({2, "f=" + label(f)});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        PolyMap f = map(a, 1, 1), g = map(b, 1, 1), h = map(c, 1, 1);
        {
          PolyMap gf = m.compose({f, 0, g, 0});
          PolyMap lhs = m.compose({gf, 0, h, 0});
          PolyMap hg = m.compose({g, 0, h, 0});
          PolyMap rhs = m.compose({f, 0, hg, 0});
          ++r.instances[2];
          if (lhs != rhs) r.counterexamples.push_back({3, "f=" + label(f) + " g=" + label(g) + " h=" + label(h)});
        }
        {
          PolyMap f1 = map(a, 1, 1), g1 = map(b, 1, 1), h2 = map(c, 2, 1);
          PolyMap lhs = m.compose({f1, 0, m.compose({g1, 0, h2, 1}), 0});
          PolyMap rhs = m.compose({g1, 0, m.compose({f1, 0, h2, 0}), 1});
          ++r.instances[3];
          if (lhs != rhs) r.counterexamples.push_back({4, "f=" + label(f1) + " g=" + label(g1) + " h=" + label(h2)});
        }
        {
          PolyMap f2 = map(a, 1, 2), g1 = map(b, 1, 1), h1 = map(c, 1, 1);
          PolyMap lhs = m.compose({m.compose({f2, 0, g1, 0}), 1, h1, 0});
          PolyMap rhs = m.compose({m.compose({f2, 1, h1, 0}), 0, g1, 0});
          ++r.instances[4];
          if (lhs != rhs) r.counterexamples.push_back({5, "f=" + label(f2) + " g=" + label(g1) + " h=" + label(h1)});
        }
      }
}

}  // namespace

bool AxiomReport::fails_law(int law) const {
  return std::any_of(counterexamples.begin(), counterexamples.end(), [&](const Counterexample& c) { return c.law == law; });
}

std::vector<std::string> AxiomReport::lines() const {
  std::vector<std::string> out;
  for (int law = 1; law <= 5; ++law) {
    std::size_t bad = 0;
    for (const auto& c : counterexamples) bad += c.law == law;
    out.push_back("Eq (" + std::to_string(law) + "): " + std::to_string(instances[law - 1]) + " instances, " +
                  std::to_string(bad) + " counterexamples");
  }
  for (const auto& c : counterexamples) out.push_back("counterexample Eq (" + std::to_string(c.law) + "): " + c.witness);
  return out;
}

AxiomReport check_axioms(const FinPolycategory& p) {
  AxiomReport r;
  r.presentation = p.name();
  r.bound = p.arity_bound();
  r.bound_relative = p.is_germ();
  if (const auto* m = p.as_monoid()) {
    check_monoid(*m, r);
  } else {
    Scope s(p);
    GermChecker(s, r).run();
  }
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  return r;
}

}  // namespace polycat
