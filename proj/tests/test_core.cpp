#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "polycat/axioms.hpp"
#include "polycat/corpus.hpp"
#include "polycat/error.hpp"
#include "polycat/functor.hpp"
#include "polycat/polycategory.hpp"
#include "polycat/scope.hpp"

using namespace polycat;

namespace {

ObjectList stars(std::size_t n) { return ObjectList(n, MonoidPolycategory::star()); }

Boundary shape(std::size_t m, std::size_t n) { return {stars(m), stars(n)}; }

PolyMap arrow(const std::string& label, std::size_t m, std::size_t n) { return {label, shape(m, n)}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvariantError;
}

// All commutative tables on {0..n-1} with unit 0, associative or not.
std::vector<MonoidPresentation> commutative_unital_tables(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) free_pairs.push_back({a, b});
  std::vector<MonoidPresentation> out;
  std::vector<std::size_t> choice(free_pairs.size(), 0);
  while (true) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) t[0][a] = t[a][0] = a;
    for (std::size_t k = 0; k < free_pairs.size(); ++k)
      t[free_pairs[k].first][free_pairs[k].second] = t[free_pairs[k].second][free_pairs[k].first] = choice[k];
    MonoidPresentation m;
    m.name = "M" + std::to_string(out.size());
    for (std::size_t a = 0; a < n; ++a) m.elements.push_back(std::to_string(a));
    m.unit = "0";
    m.mult.assign(n, std::vector<std::string>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m.mult[a][b] = std::to_string(t[a][b]);
    out.push_back(m);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == n) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

bool associative(const MonoidPresentation& m) {
  auto at = [&](const std::string& a, const std::string& b) { return m.mult[std::stoul(a)][std::stoul(b)]; };
  for (const auto& a : m.elements)
    for (const auto& b : m.elements)
      for (const auto& c : m.elements)
        if (at(at(a, b), c) != at(a, at(b, c))) return false;
  return true;
}

}  // namespace

TEST(Planarity, SingleOutputCutAnyPosition) {
  for (std::size_t j = 0; j < 2; ++j) {
    Boundary b = composite_boundary(shape(3, 1), 0, shape(2, 1), j);
    EXPECT_EQ(b.arity_in(), 4u);
    EXPECT_EQ(b.arity_out(), 1u);
  }
}

TEST(Planarity, BothContextsNonemptyNamesBothSides) {
  Boundary fb{{}, {"B1", "A", "B2"}};
  Boundary gb{{"C1", "A", "C2"}, {}};
  auto r = plan_composition(fb, 1, gb, 1);
  ASSERT_TRUE(std::holds_alternative<PlanarityViolation>(r));
  const auto& v = std::get<PlanarityViolation>(r);
  EXPECT_TRUE(v.left);
  EXPECT_TRUE(v.right);
  try {
    composite_boundary(fb, 1, gb, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PlanarityViolation);
    EXPECT_NE(e.detail().find("both sides"), std::string::npos);
  }
}

TEST(Planarity, TrailingOutputIntoLeadingInput) {
  Boundary b = composite_boundary(parse_boundary("A->X,A'"), 1, parse_boundary("A',Y->Z"), 0);
  EXPECT_EQ(b, parse_boundary("A,Y->X,Z"));
}

TEST(Planarity, Errors) {
  EXPECT_EQ(code_of([] { plan_composition(parse_boundary("A->B"), 0, parse_boundary("C->D"), 0); }),
            ErrorCode::TypeMismatch);
  EXPECT_EQ(code_of([] { plan_composition(parse_boundary("A->B"), 1, parse_boundary("B->D"), 0); }),
            ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { plan_composition(parse_boundary("A->B"), 0, parse_boundary("B->D"), 2); }),
            ErrorCode::IndexOutOfRange);
}

// Exhaustive over typed shapes with at most 3 inputs and outputs on two objects.
TEST(Planarity, SweepAgreesWithPredicateAndFormula) {
  const ObjectList objs{"A", "B"};
  std::size_t accepted = 0, rejected = 0;
  for (const auto& fd : lists_up_to(objs, 3))
    for (const auto& fc : lists_up_to(objs, 3))
      for (const auto& gd : lists_up_to(objs, 3))
        for (const auto& gc : lists_up_to(objs, 3)) {
          Boundary fb{fd, fc}, gb{gd, gc};
          for (std::size_t i = 0; i < fc.size(); ++i)
            for (std::size_t j = 0; j < gd.size(); ++j) {
              if (fc[i] != gd[j]) continue;
              const bool expect = (i == 0 || j == 0) && (i + 1 == fc.size() || j + 1 == gd.size());
              auto r = plan_composition(fb, i, gb, j);
              ASSERT_EQ(std::holds_alternative<Boundary>(r), expect);
              if (!expect) {
                ++rejected;
                continue;
              }
              ++accepted;
              ObjectList dom(gd.begin(), gd.begin() + j);
              dom.insert(dom.end(), fd.begin(), fd.end());
              dom.insert(dom.end(), gd.begin() + j + 1, gd.end());
              ObjectList cod(fc.begin(), fc.begin() + i);
              cod.insert(cod.end(), gc.begin(), gc.end());
              cod.insert(cod.end(), fc.begin() + i + 1, fc.end());
              const auto& b = std::get<Boundary>(r);
              ASSERT_EQ(b, (Boundary{dom, cod}));
              ASSERT_EQ(b.arity_in(), fd.size() + gd.size() - 1);
              ASSERT_EQ(b.arity_out(), fc.size() + gc.size() - 1);
            }
        }
  EXPECT_GT(accepted, 0u);
  EXPECT_GT(rejected, 0u);
}

TEST(Compose, TerminalUniqueArrow) {
  auto t = terminal(4);
  PolyMap c = t->compose({arrow("!", 3, 1), 0, arrow("!", 2, 1), 0});
  EXPECT_EQ(c, arrow("!", 4, 1));
  EXPECT_EQ(t->hom(shape(2, 3)).size(), 1u);
  EXPECT_EQ(t->identity(MonoidPolycategory::star()), arrow("!", 1, 1));
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(t->compose({arrow("!", 1, 2), i, arrow("!", 2, 2), 1 - i}), arrow("!", 2, 3));
}

TEST(Compose, BoolReadsMultTable) {
  auto b = from_monoid(bool_monoid(), 4);
  EXPECT_EQ(b->compose({arrow("0", 1, 1), 0, arrow("1", 1, 1), 0}).id, "0");
  EXPECT_EQ(b->compose({arrow("1", 2, 1), 0, arrow("1", 1, 2), 0}).id, "1");
  EXPECT_EQ(b->identity(MonoidPolycategory::star()).id, "1");
}

TEST(Compose, IdentityIsUnitInTables) {
  auto z = materialize(*from_monoid(cyclic_group(3), 2));
  Scope s(*z);
  for (const auto& f : z->polymaps())
    for (std::size_t j = 0; j < f.dom().size(); ++j)
      EXPECT_EQ(z->compose({z->identity(f.dom()[j]), 0, f, j}), f);
}

TEST(Compose, TableRejectsNonplanarAndOutOfBound) {
  auto z = materialize(*from_monoid(cyclic_group(2), 2));
  EXPECT_EQ(code_of([&] { z->compose({arrow("1", 1, 2), 1, arrow("0", 2, 1), 1}); }), ErrorCode::PlanarityViolation);
  EXPECT_EQ(code_of([&] { z->compose({arrow("1", 2, 1), 0, arrow("0", 2, 1), 0}); }), ErrorCode::OutOfBound);
}

// Every planar in-bound request composes and every crossing one is rejected.
TEST(Compose, TotalityWithinBound) {
  auto z = materialize(*from_monoid(bool_monoid(), 2));
  const auto maps = z->polymaps();
  std::size_t composed = 0;
  for (const auto& f : maps)
    for (std::size_t i = 0; i < f.cod().size(); ++i)
      for (const auto& g : maps)
        for (std::size_t j = 0; j < g.dom().size(); ++j) {
          auto r = plan_composition(f.boundary, i, g.boundary, j);
          if (std::holds_alternative<PlanarityViolation>(r)) {
            EXPECT_EQ(code_of([&] { z->compose({f, i, g, j}); }), ErrorCode::PlanarityViolation);
          } else if (z->in_bound(std::get<Boundary>(r))) {
            EXPECT_EQ(z->compose({f, i, g, j}).boundary, std::get<Boundary>(r));
            ++composed;
          } else {
            EXPECT_EQ(code_of([&] { z->compose({f, i, g, j}); }), ErrorCode::OutOfBound);
          }
        }
  EXPECT_GT(composed, 0u);
}

TEST(Axioms, TerminalPassesUpToFive) {
  for (std::size_t b = 1; b <= 5; ++b) {
    auto r = check_axioms(*terminal(b));
    EXPECT_TRUE(r.passed()) << b;
  }
  for (std::size_t b = 1; b <= 3; ++b) {
    auto r = check_axioms(*materialize(*terminal(b)));
    EXPECT_TRUE(r.passed()) << b;
    EXPECT_TRUE(r.bound_relative);
  }
}

TEST(Axioms, CorruptedEntryHasAssociativityWitness) {
  auto z = materialize(*from_monoid(cyclic_group(2), 2));
  ASSERT_TRUE(check_axioms(*z).passed());
  auto bad = z->with_composition({arrow("1", 1, 1), 0, arrow("1", 1, 1), 0}, arrow("1", 1, 1));
  auto r = check_axioms(bad);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.fails_law(3));
  auto lines = r.lines();
  EXPECT_TRUE(std::any_of(lines.begin(), lines.end(),
                          [](const std::string& l) { return l.find("counterexample Eq (3)") != std::string::npos; }));
}

// from_monoid accepts exactly the associative tables, and all of them pass
// the axiom checker.
TEST(Axioms, AllCommutativeMonoidsUpToOrderFour) {
  std::size_t monoids = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& m : commutative_unital_tables(n)) {
      if (!associative(m)) {
        ASSERT_EQ(code_of([&] { from_monoid(m, 2); }), ErrorCode::NotAMonoid) << m.name;
        continue;
      }
      ++monoids;
      auto p = from_monoid(m, 3);
      ASSERT_TRUE(check_axioms(*p).passed()) << n << " " << m.name;
    }
  // Labelled commutative monoids with unit 0 of orders 1..4: 1 + 2 + 9 + 94.
  EXPECT_EQ(monoids, 106u);
}

TEST(FromMonoid, ValidPresentations) {
  EXPECT_NO_THROW(from_monoid(bool_monoid(), 4));
  EXPECT_NO_THROW(from_monoid(cyclic_group(3), 4));
  EXPECT_NO_THROW(from_monoid(klein_group(), 4));
}

TEST(FromMonoid, BooleanMatricesDoNotCommute) {
  // 2x2 Boolean matrices, entries packed as bits (a b ; c d) -> abcd.
  MonoidPresentation m;
  m.name = "Mat2(Bool)";
  auto name = [](unsigned x) {
    std::string s;
    for (int k = 3; k >= 0; --k) s += ((x >> k) & 1) ? '1' : '0';
    return s;
  };
  auto bit = [](unsigned x, int r, int c) { return (x >> (3 - (2 * r + c))) & 1; };
  for (unsigned x = 0; x < 16; ++x) m.elements.push_back(name(x));
  m.unit = "1001";
  m.mult.assign(16, std::vector<std::string>(16));
  for (unsigned x = 0; x < 16; ++x)
    for (unsigned y = 0; y < 16; ++y) {
      unsigned z = 0;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          unsigned v = (bit(x, r, 0) & bit(y, 0, c)) | (bit(x, r, 1) & bit(y, 1, c));
          z |= v << (3 - (2 * r + c));
        }
      m.mult[x][y] = name(z);
    }
  EXPECT_EQ(code_of([&] { from_monoid(m, 2); }), ErrorCode::NotCommutative);
}

TEST(FromMonoid, NonAssociativeNamesTriple) {
  MonoidPresentation m{"bad", {"e", "a", "b"}, "e", {{"e", "a", "b"}, {"a", "b", "b"}, {"b", "b", "a"}}};
  try {
    from_monoid(m, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAMonoid);
    EXPECT_NE(e.detail().find("("), std::string::npos);
  }
}

TEST(Terminal, UniqueFunctorIsIdentityOnTerminal) {
  auto t = terminal(3);
  auto u = unique_functor_to_terminal(t);
  for (const auto& f : t->polymaps()) EXPECT_EQ(u(f), f);
  EXPECT_TRUE(check_functor(u).passed());
}

TEST(Terminal, UniqueFunctorCollapsesBoolAndTables) {
  auto b = from_monoid(bool_monoid(), 3);
  auto u = unique_functor_to_terminal(b);
  EXPECT_EQ(u(arrow("0", 2, 1)), u(arrow("1", 2, 1)));
  EXPECT_EQ(u(arrow("0", 2, 1)), arrow("!", 2, 1));
  EXPECT_TRUE(check_functor(u).passed());
  auto z = materialize(*from_monoid(cyclic_group(3), 2));
  auto uz = unique_functor_to_terminal(z);
  for (const auto& f : z->polymaps()) EXPECT_EQ(uz(f).boundary, shape(f.dom().size(), f.cod().size()));
  EXPECT_TRUE(check_functor(uz).passed());
}

TEST(Table, ConstructorRejectsMissingEntries) {
  auto z = materialize(*from_monoid(cyclic_group(2), 2));
  auto entries = z->entries();
  entries.pop_back();
  EXPECT_EQ(code_of([&] {
              TablePolycategory("broken", z->objects(), 2, z->polymaps(), z->identities(), entries);
            }),
            ErrorCode::InvariantError);
}
