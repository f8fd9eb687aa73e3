#include <gtest/gtest.h>

#include "polycat/corpus.hpp"
#include "polycat/error.hpp"
#include "polycat/scope.hpp"
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

// In a commutative monoid, h = x . u has a unique solution x for every h
// exactly when u is invertible.
bool invertible(const MonoidPolycategory& m, std::size_t u) {
  for (std::size_t x = 0; x < m.elements().size(); ++x)
    if (m.mult(x, u) == m.unit()) return true;
  return false;
}

}  // namespace

TEST(Universal, TerminalArrows) {
  auto t = terminal(3);
  EXPECT_TRUE(is_out_universal(*t, arrow("!", 2, 1), 0).universal());
  EXPECT_TRUE(is_in_universal(*t, arrow("!", 1, 2), 0).universal());
}

TEST(Universal, BoolUnitOnly) {
  auto b = from_monoid(bool_monoid(), 3);
  EXPECT_TRUE(is_out_universal(*b, arrow("1", 2, 1), 0).universal());
  auto zero = is_out_universal(*b, arrow("0", 2, 1), 0);
  ASSERT_FALSE(zero.universal());
  EXPECT_NE(zero.failure->factorizations, 1u);
  EXPECT_TRUE(is_in_universal(*b, arrow("1", 1, 2), 0).universal());
  EXPECT_FALSE(is_in_universal(*b, arrow("0", 1, 2), 0).universal());
}

TEST(Universal, IdentitiesOnly) {
  auto p = identities_only({"A"}, 3);
  auto id = p->identity("A");
  EXPECT_TRUE(is_out_universal(*p, id, 0).universal());
  EXPECT_TRUE(is_in_universal(*p, id, 0).universal());
}

// Every polymap at every position against the invertibility oracle.
TEST(Universal, MonoidsMatchInvertibility) {
  for (const auto& p : corpus(3)) {
    const auto* m = p->as_monoid();
    if (!m) continue;
    Scope s(*p);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto& f = s.at(k);
      const bool want = invertible(*m, m->element_index(f.id));
      for (std::size_t i = 0; i < f.cod().size(); ++i)
        EXPECT_EQ(is_out_universal(s, k, i).universal(), want) << p->name() << " " << to_string(f);
      for (std::size_t j = 0; j < f.dom().size(); ++j)
        EXPECT_EQ(is_in_universal(s, k, j).universal(), want) << p->name() << " " << to_string(f);
    }
  }
}

TEST(Universal, IdentitiesAreUniversalEverywhere) {
  for (const auto& p : corpus(3)) {
    Scope s(*p);
    for (const auto& a : p->objects()) {
      EXPECT_TRUE(is_in_universal(s, s.identity(a), 0).universal()) << p->name();
      EXPECT_TRUE(is_out_universal(s, s.identity(a), 0).universal()) << p->name();
    }
  }
}

TEST(Universal, CertificateRecordsBound) {
  auto p = identities_only({"A"}, 3);
  auto c = is_out_universal(*p, p->identity("A"), 0);
  EXPECT_EQ(c.bound, 3u);
  EXPECT_TRUE(c.bound_relative);
  EXPECT_GT(c.checked_instances, 0u);
}

TEST(Tensor, Terminal) {
  auto t = terminal(3);
  Scope s(*t);
  auto r = find_tensor(s, {star(), star()});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->object, star());
  EXPECT_EQ(r->witness, arrow("!", 2, 1));
  EXPECT_EQ(r->kind, UniversalKind::Tensor);
  auto q = find_par(s, {star(), star()});
  ASSERT_TRUE(q);
  EXPECT_EQ(q->witness, arrow("!", 1, 2));
}

TEST(Tensor, IdentitiesOnlyHasNone) {
  auto p = identities_only({"A"}, 3);
  Scope s(*p);
  EXPECT_FALSE(find_tensor(s, {"A", "A"}));
  EXPECT_FALSE(find_par(s, {"A", "A"}));
}

TEST(Tensor, GroupFirstElementInOrder) {
  auto z = from_monoid(cyclic_group(2), 3);
  Scope s(*z);
  auto r = find_tensor(s, {star(), star()});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->witness, arrow("0", 2, 1));
  for (const auto* label : {"0", "1"}) EXPECT_TRUE(is_out_universal(*z, arrow(label, 2, 1), 0).universal());
  auto q = find_par(s, {star(), star()});
  ASSERT_TRUE(q);
  EXPECT_EQ(q->witness, arrow("0", 1, 2));
}

// Any two tensors of the same list are related by exactly one unary map, and
// that map is invertible.
TEST(Tensor, UniqueUpToUniqueIso) {
  for (const auto& p : corpus(3)) {
    Scope s(*p);
    for (const auto& a : p->objects()) {
      ObjectList gamma{a, a};
      std::vector<std::size_t> tensors;
      for (const auto& b : p->objects())
        for (std::size_t u : s.hom(Boundary{gamma, {b}}))
          if (is_out_universal(s, u, 0).universal()) tensors.push_back(u);
      for (std::size_t u : tensors)
        for (std::size_t v : tensors) {
          const ObjectId& x = s.at(u).cod()[0];
          const ObjectId& y = s.at(v).cod()[0];
          std::vector<std::size_t> connecting;
          for (std::size_t h : s.hom(Boundary{{x}, {y}}))
            if (s.compose(u, 0, h, 0) == v) connecting.push_back(h);
          ASSERT_EQ(connecting.size(), 1u) << p->name();
          bool inverse = false;
          for (std::size_t k : s.hom(Boundary{{y}, {x}}))
            inverse = inverse || (s.compose(connecting[0], 0, k, 0) == s.identity(x) &&
                                  s.compose(k, 0, connecting[0], 0) == s.identity(y));
          EXPECT_TRUE(inverse) << p->name();
        }
    }
  }
}

TEST(Duals, GroupSelfDualByUnit) {
  auto z = from_monoid(cyclic_group(2), 3);
  Scope s(*z);
  auto r = find_right_dual(s, star());
  ASSERT_TRUE(r);
  EXPECT_EQ(r->object, star());
  EXPECT_EQ(r->witness, arrow("0", 0, 2));
  ASSERT_TRUE(r->partner);
  EXPECT_EQ(*r->partner, arrow("0", 2, 0));
  EXPECT_TRUE(r->cross_validated);
  auto l = find_left_dual(s, star());
  ASSERT_TRUE(l);
  EXPECT_EQ(l->object, star());
}

TEST(Duals, TerminalSelfDualIdentitiesNone) {
  auto t = terminal(3);
  Scope st(*t);
  ASSERT_TRUE(find_right_dual(st, star()));
  ASSERT_TRUE(find_left_dual(st, star()));
  EXPECT_EQ(find_right_dual(st, star())->object, star());
  auto p = identities_only({"A", "B"}, 3);
  Scope sp(*p);
  EXPECT_FALSE(find_right_dual(sp, "A"));
  EXPECT_FALSE(find_left_dual(sp, "B"));
}

TEST(Duals, FiveConditionsAgreeOnCorpus) {
  std::size_t pairs = 0;
  for (const auto& p : corpus(3)) {
    Scope s(*p);
    for (const auto& a : p->objects())
      for (const auto& d : p->objects())
        for (bool right : {true, false}) {
          auto c = dual_conditions(s, a, d, right);
          EXPECT_TRUE(c.agree()) << p->name() << " " << a.name << " " << d.name;
          ++pairs;
        }
  }
  EXPECT_EQ(pairs, 2u * (5 + 1 + 4));
}

TEST(Birep, Decisions) {
  for (const auto& p : corpus(4)) {
    auto d = decide_birepresentable(*p);
    EXPECT_TRUE(d.agree()) << p->name();
    const bool want = p->as_monoid() != nullptr;
    EXPECT_EQ(d.birepresentable(), want) << p->name();
    EXPECT_FALSE(d.evidence.empty());
  }
}

TEST(Birep, IdentitiesOnlyEvidenceNamesMissingTensor) {
  auto d = decide_birepresentable(*identities_only({"A"}, 4));
  bool named = false;
  for (const auto& e : d.evidence) named = named || e.find("no tensor") != std::string::npos;
  EXPECT_TRUE(named);
  EXPECT_TRUE(d.bound_relative);
}

TEST(Birep, UniversalComposites) {
  for (const auto& p : corpus(3)) {
    auto r = universal_composition_check(*p);
    EXPECT_TRUE(r.passed()) << p->name();
  }
  EXPECT_GT(universal_composition_check(*from_monoid(cyclic_group(2), 3)).checked, 0u);
}

TEST(Positions, ParseAndPrint) {
  EXPECT_EQ(parse_position("out:2"), (Position{Side::Out, 2}));
  EXPECT_EQ(parse_position("in:0"), (Position{Side::In, 0}));
  EXPECT_EQ(to_string(Position{Side::In, 3}), "in:3");
  EXPECT_THROW(parse_position("side:1"), Error);
}
