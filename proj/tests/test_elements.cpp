#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "polycat/corpus.hpp"
#include "polycat/distributor.hpp"
#include "polycat/elements.hpp"
#include "polycat/error.hpp"
#include "polycat/lax_functor.hpp"

using namespace polycat;

namespace {

// X --a--> Y.
CatPtr arrow_category() {
  std::vector<Morphism> ms{{"id_X", 0, 0}, {"id_Y", 1, 1}, {"a", 0, 1}};
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp{{{0, 0}, 0}, {{1, 1}, 1}, {{2, 0}, 2}, {{1, 2}, 2}};
  return std::make_shared<FinCategory>("arrow", ObjectList{"X", "Y"}, ms, std::vector<std::size_t>{0, 1}, comp);
}

// Contravariant in C: P(;X) = {p, q}, P(;Y) = {r}, a sends r to p.
FinDistributor presheaf(const CatPtr& c) {
  return FinDistributor::tabulate(
      "P", {c}, {},
      [](const std::vector<std::size_t>&, const std::vector<std::size_t>& ins) {
        return ins[0] == 0 ? std::vector<std::string>{"p", "q"} : std::vector<std::string>{"r"};
      },
      [c](const Position&, std::size_t mo, const DistElement& x) {
        return c->morphism(mo).id == "a" ? std::string("p") : x.name;
      });
}

// Covariant in C: Q(X;) = {u}, Q(Y;) = {v, w}, a sends u to w.
FinDistributor copresheaf(const CatPtr& c) {
  return FinDistributor::tabulate(
      "Q", {}, {c},
      [](const std::vector<std::size_t>& outs, const std::vector<std::size_t>&) {
        return outs[0] == 0 ? std::vector<std::string>{"u"} : std::vector<std::string>{"v", "w"};
      },
      [c](const Position&, std::size_t mo, const DistElement& x) {
        return c->morphism(mo).id == "a" ? std::string("w") : x.name;
      });
}

std::size_t hom_morphism(const CatPtr& c, const FinDistributor& hom, std::size_t e) {
  return c->morphism_index(hom.element(e).name);
}

// Maps a left-nested triple composite onto the right-nested one through the
// class maps of the four binary composites.
std::vector<std::size_t> reassociate(const DistributorComposite& ab, const DistributorComposite& ab_c,
                                     const DistributorComposite& bc, const DistributorComposite& a_bc) {
  std::vector<std::size_t> map(ab_c.result->size());
  for (std::size_t e = 0; e < map.size(); ++e) {
    auto [x, c] = ab_c.representative[e];
    auto [a, b] = ab.representative[x];
    map[e] = a_bc.class_of.at({a, bc.class_of.at({b, c})});
  }
  return map;
}

}  // namespace

TEST(Distributors, HomIsRepresentable) {
  auto c = arrow_category();
  auto h = hom_distributor(c);
  EXPECT_EQ(h.size(), 3u);
  EXPECT_FALSE(representability_failure(h, {Side::Out, 0}));
  EXPECT_FALSE(representability_failure(h, {Side::In, 0}));
}

TEST(Distributors, EmptyTupleIsNotRepresentable) {
  auto d = std::make_shared<FinCategory>(FinCategory::discrete("D", {"X", "Y"}));
  auto p = FinDistributor::tabulate(
      "E", {d}, {d},
      [](const std::vector<std::size_t>& outs, const std::vector<std::size_t>& ins) {
        return outs[0] == 0 && ins[0] == 0 ? std::vector<std::string>{"e"} : std::vector<std::string>{};
      },
      [](const Position&, std::size_t, const DistElement& x) { return x.name; });
  EXPECT_TRUE(representability_failure(p, {Side::Out, 0}));
  EXPECT_TRUE(representability_failure(p, {Side::In, 0}));
}

TEST(Distributors, CoYonedaOnBothSides) {
  auto c = arrow_category();
  auto h = hom_distributor(c);
  auto p = presheaf(c);
  auto hp = compose_distributors(h, 0, p, 0);
  std::vector<std::size_t> map(hp.result->size());
  for (std::size_t e = 0; e < map.size(); ++e) {
    auto [f, x] = hp.representative[e];
    map[e] = p.act({Side::In, 0}, hom_morphism(c, h, f), x);
  }
  EXPECT_EQ(hp.result->size(), p.size());
  EXPECT_TRUE(check_distributor_map(*hp.result, p, map, true).empty());

  auto q = copresheaf(c);
  auto qh = compose_distributors(q, 0, h, 0);
  std::vector<std::size_t> map2(qh.result->size());
  for (std::size_t e = 0; e < map2.size(); ++e) {
    auto [x, f] = qh.representative[e];
    map2[e] = q.act({Side::Out, 0}, hom_morphism(c, h, f), x);
  }
  EXPECT_EQ(qh.result->size(), q.size());
  EXPECT_TRUE(check_distributor_map(*qh.result, q, map2, true).empty());
}

TEST(Distributors, WrongMapIsRejected) {
  auto c = arrow_category();
  auto h = hom_distributor(c);
  auto p = presheaf(c);
  auto hp = compose_distributors(h, 0, p, 0);
  std::vector<std::size_t> constant(hp.result->size(), 0);
  EXPECT_FALSE(check_distributor_map(*hp.result, p, constant, true).empty());
}

TEST(Distributors, SingletonComposite) {
  auto one = std::make_shared<FinCategory>(FinCategory::discrete("1", {"x"}));
  auto s = FinDistributor::tabulate(
      "s", {one, one}, {one},
      [](const std::vector<std::size_t>&, const std::vector<std::size_t>&) { return std::vector<std::string>{"*"}; },
      [](const Position&, std::size_t, const DistElement& x) { return x.name; });
  auto c = compose_distributors(s, 0, s, 1);
  EXPECT_EQ(c.result->inputs().size(), 3u);
  EXPECT_EQ(c.result->size(), 1u);
}

TEST(Distributors, DiscreteCompositeIsProductSum) {
  auto d = std::make_shared<FinCategory>(FinCategory::discrete("D", {"X", "Y"}));
  auto q = FinDistributor::tabulate(
      "Q", {}, {d},
      [](const std::vector<std::size_t>& outs, const std::vector<std::size_t>&) {
        return outs[0] == 0 ? std::vector<std::string>{"a", "b"} : std::vector<std::string>{"c"};
      },
      [](const Position&, std::size_t, const DistElement& x) { return x.name; });
  auto p = FinDistributor::tabulate(
      "P", {d}, {},
      [](const std::vector<std::size_t>&, const std::vector<std::size_t>& ins) {
        return ins[0] == 0 ? std::vector<std::string>{"u"} : std::vector<std::string>{"v", "w"};
      },
      [](const Position&, std::size_t, const DistElement& x) { return x.name; });
  auto c = compose_distributors(q, 0, p, 0);
  EXPECT_EQ(c.result->size(), 2u * 1 + 1u * 2);
  EXPECT_EQ(c.class_of.size(), 4u);
}

TEST(Distributors, CompositionErrors) {
  auto c = arrow_category();
  auto d = std::make_shared<FinCategory>(FinCategory::discrete("D", {"X", "Y"}));
  try {
    compose_distributors(hom_distributor(c), 0, hom_distributor(d), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundaryMismatch);
  }
  auto one = std::make_shared<FinCategory>(FinCategory::discrete("1", {"x"}));
  auto wide = FinDistributor::tabulate(
      "w", {one, one, one}, {one, one, one},
      [](const std::vector<std::size_t>&, const std::vector<std::size_t>&) { return std::vector<std::string>{"*"}; },
      [](const Position&, std::size_t, const DistElement& x) { return x.name; });
  try {
    compose_distributors(wide, 1, wide, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PlanarityViolation);
  }
}

TEST(Distributors, AssociativeUpToBijection) {
  auto c = arrow_category();
  auto h = hom_distributor(c);
  auto p = presheaf(c);
  auto hh = compose_distributors(h, 0, h, 0);
  auto hh_h = compose_distributors(*hh.result, 0, h, 0);
  auto h_hh = compose_distributors(h, 0, *hh.result, 0);
  auto map = reassociate(hh, hh_h, hh, h_hh);
  EXPECT_TRUE(check_distributor_map(*hh_h.result, *h_hh.result, map, true).empty());
  EXPECT_EQ(hh_h.result->size(), h.size());

  auto hp = compose_distributors(h, 0, p, 0);
  auto hh_p = compose_distributors(*hh.result, 0, p, 0);
  auto h_hp = compose_distributors(h, 0, *hp.result, 0);
  auto map2 = reassociate(hh, hh_p, hp, h_hp);
  EXPECT_TRUE(check_distributor_map(*hh_p.result, *h_hp.result, map2, true).empty());
}

TEST(LaxNormal, PassingFunctors) {
  EXPECT_TRUE(check_lax_normal(singleton_functor(terminal(2))).passed());
  EXPECT_TRUE(check_lax_normal(fibres_functor(bool_to_terminal(2))).passed());
  EXPECT_TRUE(check_lax_normal(fibres_functor(identity_functor(from_monoid(cyclic_group(2), 2)))).passed());
  EXPECT_TRUE(check_lax_normal(action_functor(bool_action())).passed());
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    EXPECT_TRUE(check_lax_normal(random_graded_case(seed, seed % 2 == 0).functor).passed()) << seed;
}

TEST(LaxNormal, MisdirectedMuFails) {
  auto f = fibres_functor(bool_to_terminal(2));
  bool mutated = false;
  for (auto& [key, table] : f.mu) {
    for (auto& [pair, z] : table) {
      const auto& d = f.dist(f.base->compose(CompositionRequest{key.f, key.i, key.g, key.j}));
      const auto& el = d.element(z);
      for (std::size_t other : d.at(el.outs, el.ins))
        if (other != z) {
          z = other;
          mutated = true;
          break;
        }
      if (mutated) break;
    }
    if (mutated) break;
  }
  ASSERT_TRUE(mutated);
  auto r = check_lax_normal(f);
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(build_elements(f), Error);
}

TEST(FibresFunctor, BoolOverTerminal) {
  auto p = bool_to_terminal(2);
  auto f = fibres_functor(p);
  const auto& fibre = f.fibre(MonoidPolycategory::star());
  EXPECT_EQ(fibre.object_count(), 1u);
  EXPECT_EQ(fibre.morphisms().size(), 2u);
  std::size_t maps = 0;
  for (const auto& g : p.target().polymaps()) {
    EXPECT_EQ(f.dist(g).size(), 2u) << to_string(g);
    ++maps;
  }
  EXPECT_EQ(maps, f.dists.size());
}

TEST(FibresFunctor, IdentityOnTerminalIsSingletons) {
  auto f = fibres_functor(identity_functor(terminal(2)));
  for (const auto& [g, d] : f.dists) EXPECT_EQ(d->size(), 1u);
  EXPECT_EQ(f.fibre(MonoidPolycategory::star()).morphisms().size(), 1u);
}

TEST(Elements, TerminalAndSingletons) {
  auto e = build_elements(singleton_functor(terminal(2)));
  EXPECT_TRUE(e.axioms.passed());
  EXPECT_TRUE(e.functor.passed());
  EXPECT_TRUE(is_terminal(*e.total));
  EXPECT_EQ(e.total->polymaps().size(), terminal(2)->polymaps().size());
}

// The presheaf case against the classical category of elements: an arrow
// x -> y over m exactly when y . m = x.
TEST(Elements, ClassicalCategoryOfElements) {
  auto a = bool_action();
  auto e = build_elements(action_functor(a));
  EXPECT_TRUE(e.axioms.passed());
  EXPECT_EQ(e.total->objects().size(), a.set.size());
  for (std::size_t x = 0; x < a.set.size(); ++x)
    for (std::size_t y = 0; y < a.set.size(); ++y) {
      std::size_t want = 0;
      for (std::size_t m = 0; m < a.monoid.elements.size(); ++m) want += a.action[y][m] == a.set[x];
      ObjectId ox("(*," + a.set[x] + ")"), oy("(*," + a.set[y] + ")");
      EXPECT_EQ(e.total->hom(Boundary{{ox}, {oy}}).size(), want) << a.set[x] << " " << a.set[y];
    }
}

TEST(Elements, CardinalityIdentity) {
  std::vector<LaxNormalFunctor> fs{fibres_functor(bool_to_terminal(2)), action_functor(bool_action()),
                                   nonrepresentable_case().functor, random_graded_case(7, false).functor};
  for (const auto& f : fs) {
    auto e = build_elements(f);
    std::map<PolyMap, std::size_t> over;
    for (const auto& g : e.total->polymaps()) {
      auto it = e.origin.find(g);
      ASSERT_NE(it, e.origin.end());
      EXPECT_EQ((*e.projection)(g), it->second.first);
      ++over[it->second.first];
    }
    std::size_t total = 0;
    for (const auto& [b, d] : f.dists) {
      EXPECT_EQ(over[b], d->size()) << f.name << " " << to_string(b);
      total += d->size();
    }
    EXPECT_EQ(e.total->polymaps().size(), total) << f.name;
  }
}

TEST(Roundtrip, Examples) {
  EXPECT_TRUE(roundtrip_check(singleton_functor(terminal(2))).passed());
  EXPECT_TRUE(roundtrip_check(bool_to_terminal(2)).passed());
  EXPECT_TRUE(roundtrip_check(identity_functor(terminal(2))).passed());
  EXPECT_TRUE(roundtrip_check(fibres_functor(bool_to_terminal(2))).passed());
  EXPECT_TRUE(roundtrip_check(action_functor(bool_action())).passed());
}

TEST(Roundtrip, RandomCases) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto c = random_graded_case(seed, seed % 3 == 0);
    EXPECT_TRUE(roundtrip_check(c.functor).passed()) << c.description;
    EXPECT_TRUE(roundtrip_check(*c.projection).passed()) << c.description;
  }
}

TEST(Mvar, Examples) {
  EXPECT_TRUE(mvar_check(singleton_functor(terminal(2))).holds());
  EXPECT_TRUE(mvar_check(fibres_functor(bool_to_terminal(2))).holds());
  EXPECT_TRUE(mvar_check(representable_terminal_case().functor).holds());
  auto action = mvar_check(action_functor(bool_action()));
  EXPECT_FALSE(action.representable_everywhere());
  auto non = mvar_check(nonrepresentable_case().functor);
  EXPECT_FALSE(non.representable_everywhere());
  bool listed = false;
  for (const auto& e : non.entries) listed = listed || (!e.representable && !e.unrepresented.empty());
  EXPECT_TRUE(listed);
}

TEST(Grothendieck, Crosschecks) {
  auto single = grothendieck_crosscheck(singleton_functor(terminal(2)));
  EXPECT_TRUE(single.agree());
  EXPECT_TRUE(single.mvar.holds());
  EXPECT_TRUE(single.bifib.holds());
  ASSERT_TRUE(single.birep);
  EXPECT_TRUE(single.birep->birepresentable());

  auto non = grothendieck_crosscheck(nonrepresentable_case().functor);
  EXPECT_TRUE(non.agree());
  EXPECT_FALSE(non.mvar.holds());
  EXPECT_FALSE(non.bifib.holds());
  EXPECT_TRUE(non.missing_matches);

  auto rep = grothendieck_crosscheck(representable_terminal_case().functor);
  EXPECT_TRUE(rep.agree());
  EXPECT_TRUE(rep.bifib.holds());
}

TEST(Grothendieck, RandomRepresentableCasesHold) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto c = random_graded_case(seed, true);
    auto r = grothendieck_crosscheck(c.functor);
    EXPECT_TRUE(r.agree()) << c.description;
    EXPECT_TRUE(r.mvar.holds()) << c.description;
  }
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    EXPECT_TRUE(grothendieck_crosscheck(random_graded_case(seed, false).functor).agree()) << seed;
}
