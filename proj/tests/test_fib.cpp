#include <gtest/gtest.h>

#include <set>

#include "polycat/axioms.hpp"
#include "polycat/corpus.hpp"
#include "polycat/error.hpp"
#include "polycat/fibration.hpp"
#include "polycat/frobenius.hpp"
#include "polycat/universal.hpp"

using namespace polycat;

namespace {

const ObjectId& star() { return MonoidPolycategory::star(); }

PolyMap arrow(const std::string& label, std::size_t m, std::size_t n) {
  return {label, Boundary{ObjectList(m, star()), ObjectList(n, star())}};
}

std::vector<PolycatPtr> corpus(std::size_t bound) {
  return {terminal(bound),
          from_monoid(cyclic_group(2), bound),
          from_monoid(cyclic_group(3), bound),
          from_monoid(bool_monoid(), bound),
          from_monoid(klein_group(), bound),
          identities_only({"A"}, bound),
          identities_only({"A", "B"}, bound)};
}

PolyFunctor relabelled(const std::string& name, PolycatPtr p, std::function<std::string(const PolyMap&)> label) {
  return PolyFunctor(
      name, p, p, [](const ObjectId& a) { return a; },
      [label](const PolyMap& f) { return PolyMap{label(f), f.boundary}; });
}

std::string shifted(const MonoidPolycategory& m, const std::string& x) {
  std::size_t k = m.element_index(x);
  return m.elements()[(k + 1) % m.elements().size()];
}

// Frobenius families on a monoid polycategory by brute force over every label
// assignment to the shapes within the bound.
std::set<std::vector<std::size_t>> frobenius_oracle(const MonoidPolycategory& m, std::size_t bound) {
  std::vector<Shape> shapes;
  for (std::size_t a = 0; a <= bound; ++a)
    for (std::size_t b = 0; b <= bound; ++b) shapes.push_back({a, b});
  auto index = [&](std::size_t a, std::size_t b) { return a * (bound + 1) + b; };
  const std::size_t n = m.elements().size();
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> label(shapes.size(), 0);
  while (true) {
    bool ok = label[index(1, 1)] == m.unit();
    for (std::size_t s = 0; ok && s < shapes.size(); ++s)
      for (std::size_t t = 0; ok && t < shapes.size(); ++t) {
        auto [fm, fn] = shapes[s];
        auto [gm, gn] = shapes[t];
        for (std::size_t i = 0; ok && i < fn; ++i)
          for (std::size_t j = 0; ok && j < gm; ++j) {
            const bool planar = (i == 0 || j == 0) && (i + 1 == fn || j + 1 == gm);
            const std::size_t cm = fm + gm - 1, cn = fn + gn - 1;
            if (!planar || cm > bound || cn > bound) continue;
            ok = label[index(cm, cn)] == m.mult(label[t], label[s]);
          }
      }
    if (ok) out.insert(label);
    std::size_t k = 0;
    while (k < label.size() && ++label[k] == n) label[k++] = 0;
    if (k == label.size()) break;
  }
  return out;
}

}  // namespace

TEST(Functor, CollapseAndIdentityPass) {
  EXPECT_TRUE(check_functor(unique_functor_to_terminal(from_monoid(bool_monoid(), 3))).passed());
  EXPECT_TRUE(check_functor(identity_functor(terminal(3))).passed());
  EXPECT_TRUE(check_functor(bool_to_terminal(3)).passed());
}

TEST(Functor, CorruptedMapNamesComposite) {
  auto z = from_monoid(cyclic_group(2), 2);
  auto bad = relabelled("bad", z, [](const PolyMap& f) {
    return f.boundary == arrow("0", 2, 1).boundary ? (f.id == "0" ? "1" : "0") : f.id;
  });
  auto r = check_functor(bad);
  ASSERT_FALSE(r.passed());
  for (const auto& f : r.failures) EXPECT_EQ(f.rfind("composite: ", 0), 0u) << f;
}

TEST(Cartesian, BoolOverTerminal) {
  auto p = bool_to_terminal(3);
  EXPECT_FALSE(is_in_cartesian(p, arrow("0", 1, 1), 0).cartesian());
  EXPECT_FALSE(is_out_cartesian(p, arrow("0", 1, 1), 0).cartesian());
  EXPECT_TRUE(is_in_cartesian(p, arrow("1", 2, 1), 1).cartesian());
  EXPECT_TRUE(is_out_cartesian(p, arrow("1", 1, 2), 0).cartesian());
}

TEST(Cartesian, IdentitiesRelativeToAnyFunctor) {
  std::vector<PolyFunctor> fs{bool_to_terminal(3), identity_functor(from_monoid(cyclic_group(3), 3)),
                              unique_functor_to_terminal(identities_only({"A", "B"}, 3))};
  for (const auto& p : fs)
    for (const auto& a : p.source().objects()) {
      EXPECT_TRUE(is_in_cartesian(p, p.source().identity(a), 0).cartesian()) << p.name();
      EXPECT_TRUE(is_out_cartesian(p, p.source().identity(a), 0).cartesian()) << p.name();
    }
}

// Universal in P iff cartesian relative to the collapse onto terminal, at
// every polymap and position of the corpus.
TEST(Cartesian, OverTerminalIsUniversal) {
  std::size_t compared = 0;
  for (const auto& p : corpus(3)) {
    auto u = unique_functor_to_terminal(p);
    FibrationContext c(u);
    const Scope& s = c.source();
    for (std::size_t k = 0; k < s.size(); ++k) {
      for (std::size_t j = 0; j < s.at(k).dom().size(); ++j, ++compared)
        EXPECT_EQ(is_in_universal(s, k, j).universal(), c.in_cartesian(k, j).cartesian()) << to_string(s.at(k));
      for (std::size_t i = 0; i < s.at(k).cod().size(); ++i, ++compared)
        EXPECT_EQ(is_out_universal(s, k, i).universal(), c.out_cartesian(k, i).cartesian()) << to_string(s.at(k));
    }
  }
  EXPECT_GT(compared, 100u);
}

TEST(Lifts, Examples) {
  auto z = from_monoid(cyclic_group(2), 3);
  auto id = identity_functor(z);
  FibrationContext ci(id);
  auto l = pullback_exists(ci, arrow("1", 2, 1), 0, {}, {star()}, {star()});
  ASSERT_TRUE(l);
  EXPECT_EQ(l->polymap, arrow("1", 2, 1));
  auto b = bool_to_terminal(3);
  FibrationContext cb(b);
  auto lb = pullback_exists(cb, arrow("!", 1, 1), 0, {}, {}, {star()});
  ASSERT_TRUE(lb);
  EXPECT_EQ(lb->polymap.id, "1");
  auto pb = pushforward_exists(cb, arrow("!", 1, 1), 0, {star()}, {}, {});
  ASSERT_TRUE(pb);
  EXPECT_EQ(pb->polymap.id, "1");
  auto e = unique_functor_to_terminal(identities_only({"A"}, 3));
  FibrationContext ce(e);
  EXPECT_FALSE(pullback_exists(ce, arrow("!", 2, 1), 0, {}, {"A"}, {"A"}));
  EXPECT_FALSE(pushforward_exists(ce, arrow("!", 2, 1), 0, {"A", "A"}, {}, {}));
}

TEST(Bifibration, Decisions) {
  EXPECT_TRUE(decide_bifibration(identity_functor(terminal(4))).holds());
  EXPECT_TRUE(decide_bifibration(bool_to_terminal(4)).holds());
  auto d = decide_bifibration(unique_functor_to_terminal(identities_only({"A", "B"}, 4)));
  EXPECT_FALSE(d.push.holds);
  ASSERT_TRUE(d.push.missing);
  EXPECT_EQ(d.push.missing->second.side, Side::Out);
}

TEST(Bifibration, CrosscheckAgreesOnCorpus) {
  for (const auto& p : corpus(4)) {
    auto r = birep_bifib_crosscheck(p);
    EXPECT_TRUE(r.agree()) << p->name();
    EXPECT_EQ(r.bifib.holds(), p->as_monoid() != nullptr) << p->name();
  }
}

TEST(Bifibration, BifibredOverBirepresentableGivesBirepresentable) {
  auto p = bool_to_terminal(4);
  ASSERT_TRUE(decide_birepresentable(p.target()).birepresentable());
  ASSERT_TRUE(decide_bifibration(p).holds());
  EXPECT_TRUE(decide_birepresentable(p.source()).birepresentable());
}

TEST(CartesianComposition, PassesWhereBifibred) {
  std::vector<PolyFunctor> fs{identity_functor(terminal(3)), bool_to_terminal(3),
                              unique_functor_to_terminal(from_monoid(cyclic_group(3), 3)),
                              unique_functor_to_terminal(identities_only({"A"}, 3))};
  for (const auto& p : fs) EXPECT_TRUE(cartesian_composition_check(p).passed()) << p.name();
  EXPECT_GT(cartesian_composition_check(bool_to_terminal(3)).checked, 0u);
}

TEST(CartesianOverCartesian, Stacks) {
  auto t = terminal(3);
  auto r1 = cartesian_over_cartesian_check(identity_functor(t), identity_functor(t));
  EXPECT_TRUE(r1.passed());
  auto r2 = cartesian_over_cartesian_check(bool_to_terminal(3), identity_functor(t));
  EXPECT_TRUE(r2.passed());
  EXPECT_GT(r2.checked, 0u);
}

// Shifting every label of a composite that should be the identity breaks the
// lifts of cartesian maps.
TEST(CartesianOverCartesian, CorruptedCompositeFails) {
  auto z = from_monoid(cyclic_group(2), 2);
  auto id = identity_functor(z);
  const auto* m = z->as_monoid();
  auto shift = relabelled("shift", z, [m](const PolyMap& f) { return shifted(*m, f.id); });
  ASSERT_TRUE(cartesian_over_cartesian_check(id, id, compose_functors(id, id)).passed());
  auto r = cartesian_over_cartesian_check(id, id, shift);
  ASSERT_FALSE(r.passed());
  bool lift_failure = false, disagreement = false;
  for (const auto& f : r.failures) {
    lift_failure = lift_failure || f.find("not cartesian over the composite") != std::string::npos;
    disagreement = disagreement || f.find("composite sends") != std::string::npos;
  }
  EXPECT_TRUE(lift_failure);
  EXPECT_TRUE(disagreement);
}

TEST(Frobenius, Terminal) {
  auto r = frobenius_monoids(terminal(3), star(), 3);
  ASSERT_EQ(r.monoids.size(), 1u);
  for (const auto& [shape, f] : r.monoids[0].family) EXPECT_EQ(f.id, "!");
}

TEST(Frobenius, MonoidsMatchBruteForce) {
  for (const auto& p : {from_monoid(cyclic_group(2), 2), from_monoid(bool_monoid(), 2),
                        from_monoid(cyclic_group(3), 2)}) {
    const auto& m = *p->as_monoid();
    auto want = frobenius_oracle(m, 2);
    auto r = frobenius_monoids(p, star(), 2);
    std::set<std::vector<std::size_t>> got;
    for (const auto& fm : r.monoids) {
      std::vector<std::size_t> labels;
      for (std::size_t a = 0; a <= 2; ++a)
        for (std::size_t b = 0; b <= 2; ++b) labels.push_back(m.element_index(fm.at(a, b).id));
      got.insert(labels);
      EXPECT_TRUE(check_functor(frobenius_functor(fm, p)).passed());
    }
    EXPECT_EQ(got, want) << p->name();
    EXPECT_FALSE(r.truncated);
  }
}

TEST(Frobenius, ConstantUnitFamilies) {
  auto b = frobenius_monoids(from_monoid(bool_monoid(), 3), star(), 3);
  bool constant_one = false;
  for (const auto& fm : b.monoids) {
    bool all = true;
    for (const auto& [shape, f] : fm.family) all = all && f.id == "1";
    constant_one = constant_one || all;
    EXPECT_EQ(fm.at(1, 1).id, "1");
  }
  EXPECT_TRUE(constant_one);
  auto z = frobenius_monoids(from_monoid(cyclic_group(2), 3), star(), 3);
  bool constant_e = false;
  for (const auto& fm : z.monoids) {
    bool all = true;
    for (const auto& [shape, f] : fm.family) all = all && f.id == "0";
    constant_e = constant_e || all;
  }
  EXPECT_TRUE(constant_e);
  EXPECT_TRUE(frobenius_monoids(identities_only({"A"}, 2), "A", 2).monoids.empty());
}

TEST(Polyfiber, BoolOverTerminal) {
  auto p = bool_to_terminal(3);
  auto fm = frobenius_monoids(p.target_ptr(), star(), 3).monoids.at(0);
  auto fibre = polyfiber(p, fm);
  EXPECT_EQ(fibre->polymaps().size(), p.source().polymaps().size());
  EXPECT_TRUE(check_axioms(*fibre).passed());
  EXPECT_TRUE(decide_birepresentable(*fibre).birepresentable());
}

TEST(Polyfiber, IdentityFunctorGivesTheFamily) {
  auto z = from_monoid(cyclic_group(2), 2);
  for (const auto& fm : frobenius_monoids(z, star(), 2).monoids) {
    auto fibre = polyfiber(identity_functor(z), fm);
    EXPECT_EQ(fibre->polymaps().size(), fm.family.size());
    EXPECT_TRUE(check_axioms(*fibre).passed());
  }
}

TEST(RefinementPullback, Examples) {
  auto b = bool_to_terminal(2);
  auto t = terminal(2);
  auto along_id = refinement_pullback(b, identity_functor(t));
  EXPECT_TRUE(along_id.passed());
  EXPECT_EQ(along_id.total->polymaps().size(), b.source().polymaps().size());
  EXPECT_TRUE(decide_bifibration(*along_id.to_base).holds());
  auto z = from_monoid(cyclic_group(2), 2);
  auto of_id = refinement_pullback(identity_functor(z), identity_functor(z));
  EXPECT_EQ(of_id.total->polymaps().size(), z->polymaps().size());
  EXPECT_TRUE(check_functor(*of_id.to_source).passed());
  EXPECT_TRUE(check_axioms(*of_id.total).passed());
}
