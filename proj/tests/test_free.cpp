#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "polycat/error.hpp"
#include "polycat/free.hpp"
#include "polycat/polycategory.hpp"

using namespace polycat;
using namespace polycat::trees;

namespace {

PolySignature two_ops() {
  return PolySignature({"A", "B"}, {{"f", {"A", "B"}, {"B"}}, {"g", {"B"}, {"A", "A"}}});
}

std::string enc(const TreePolymap& t) { return canonical_encoding(t).text; }

// Every tree with at most max_nodes nodes, grown from identities and
// generators by grafting one generator at a time on either side. Removing a
// node that meets the rest of a planar tree along one edge leaves a planar
// tree, so every tree is reached.
std::map<std::string, TreePolymap> grown(const PolySignature& sig, std::size_t max_nodes) {
  std::map<std::string, TreePolymap> all;
  std::vector<TreePolymap> frontier;
  for (const auto& a : sig.types()) {
    auto t = identity_tree(sig, a);
    all.emplace(enc(t), t);
  }
  std::vector<TreePolymap> gens;
  for (const auto& op : sig.operations()) gens.push_back(generator_tree(sig, op.name));
  if (max_nodes == 0) return all;
  for (const auto& g : gens) {
    all.emplace(enc(g), g);
    frontier.push_back(g);
  }
  for (std::size_t n = 1; n < max_nodes; ++n) {
    std::vector<TreePolymap> next;
    auto add = [&](const std::function<TreePolymap()>& make) {
      try {
        TreePolymap t = make();
        validate(sig, t);
        if (all.emplace(enc(t), t).second) next.push_back(t);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PlanarityViolation && e.code() != ErrorCode::TypeMismatch) throw;
      }
    };
    for (const auto& t : frontier)
      for (const auto& g : gens) {
        for (std::size_t i = 0; i < t.boundary.codomain.size(); ++i)
          for (std::size_t j = 0; j < g.boundary.domain.size(); ++j) add([&] { return graft(t, i, g, j); });
        for (std::size_t i = 0; i < g.boundary.codomain.size(); ++i)
          for (std::size_t j = 0; j < t.boundary.domain.size(); ++j) add([&] { return graft(g, i, t, j); });
      }
    frontier = std::move(next);
  }
  return all;
}

}  // namespace

TEST(FreeTrees, Generators) {
  auto sig = two_ops();
  EXPECT_EQ(generator_tree(sig, "f").boundary, parse_boundary("A,B->B"));
  EXPECT_EQ(generator_tree(sig, "g").boundary, parse_boundary("B->A,A"));
  EXPECT_EQ(generator_tree(sig, "f").nodes.size(), 1u);
  try {
    generator_tree(sig, "h");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownOperation);
  }
}

TEST(FreeTrees, IdentityTree) {
  auto sig = two_ops();
  auto id = identity_tree(sig, "A");
  EXPECT_TRUE(id.nodes.empty());
  EXPECT_EQ(id.boundary, parse_boundary("A->A"));
  EXPECT_EQ(enc(id), enc(identity_tree(sig, "A")));
  EXPECT_NE(enc(id), enc(identity_tree(sig, "B")));
  try {
    identity_tree(sig, "C");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownType);
  }
}

TEST(FreeTrees, SignatureRejectsUnknownTypes) {
  EXPECT_THROW(PolySignature({"A"}, {{"f", {"A"}, {"Z"}}}), Error);
  EXPECT_THROW(PolySignature({"A"}, {{"f", {"A"}, {"A"}}, {"f", {"A"}, {}}}), Error);
}

TEST(FreeTrees, IdentitiesAreUnits) {
  auto sig = two_ops();
  for (const auto& t : enumerate_all(sig, 4)) {
    for (std::size_t i = 0; i < t.boundary.codomain.size(); ++i)
      EXPECT_EQ(enc(graft(t, i, identity_tree(sig, t.boundary.codomain[i]), 0)), enc(t));
    for (std::size_t j = 0; j < t.boundary.domain.size(); ++j)
      EXPECT_EQ(enc(graft(identity_tree(sig, t.boundary.domain[j]), 0, t, j)), enc(t));
  }
}

TEST(FreeTrees, CompositeFromTheTwoOperationExample) {
  auto sig = two_ops();
  auto f = generator_tree(sig, "f");
  auto g = generator_tree(sig, "g");
  auto gf = graft(f, 0, g, 0);
  EXPECT_EQ(gf.boundary, parse_boundary("A,B->A,A"));
  auto c = graft(gf, 1, f, 0);
  validate(sig, c);
  EXPECT_EQ(c.boundary, parse_boundary("A,B,B->A,B"));
  EXPECT_EQ(c.nodes.size(), 3u);
  // The other bracketing of the same three generators.
  auto other = graft(f, 0, graft(g, 1, f, 0), 0);
  EXPECT_EQ(enc(other), enc(c));
  auto found = enumerate(sig, parse_boundary("A,B,B->A,B"), 3);
  bool present = false;
  for (const auto& t : found) present = present || enc(t) == enc(c);
  EXPECT_TRUE(present);
}

TEST(FreeTrees, CrossingGraftNamesBothSides) {
  auto sig = two_ops();
  auto f = generator_tree(sig, "f");
  auto g = generator_tree(sig, "g");
  auto three_out = graft(graft(g, 1, f, 0), 1, g, 0);
  auto three_in = graft(f, 0, f, 1);
  ASSERT_EQ(three_out.boundary.codomain, (ObjectList{"A", "A", "A"}));
  ASSERT_EQ(three_in.boundary.domain, (ObjectList{"A", "A", "B"}));
  try {
    graft(three_out, 1, three_in, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PlanarityViolation);
    EXPECT_NE(e.detail().find("both sides"), std::string::npos);
  }
  EXPECT_THROW(graft(f, 0, f, 0), Error);
}

TEST(FreeTrees, DistinctGeneratorsDistinctEncodings) {
  auto sig = two_ops();
  EXPECT_NE(enc(generator_tree(sig, "f")), enc(generator_tree(sig, "g")));
}

TEST(FreeEnumerate, IdentityOnlyAtZeroNodes) {
  auto sig = two_ops();
  auto ts = enumerate(sig, parse_boundary("A->A"), 0);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(enc(ts[0]), enc(identity_tree(sig, "A")));
}

TEST(FreeEnumerate, NoMapOutOfAPairOfAs) {
  auto sig = two_ops();
  for (const auto& cod : lists_up_to({"A", "B"}, 3))
    EXPECT_TRUE(enumerate(sig, Boundary{{"A", "A"}, cod}, 6).empty()) << to_string(cod);
}

// enumerate_all agrees with the grafting oracle, and enumerate with its
// restriction to each boundary.
TEST(FreeEnumerate, MatchesGraftingOracle) {
  auto sig = two_ops();
  for (std::size_t n = 0; n <= 5; ++n) {
    auto oracle = grown(sig, n);
    std::set<std::string> got;
    for (const auto& t : enumerate_all(sig, n)) {
      validate(sig, t);
      EXPECT_TRUE(got.insert(enc(t)).second) << "duplicate at " << n;
    }
    std::set<std::string> want;
    for (const auto& [e, t] : oracle) want.insert(e);
    EXPECT_EQ(got, want) << n;
    std::map<Boundary, std::set<std::string>> by_boundary;
    for (const auto& [e, t] : oracle) by_boundary[t.boundary].insert(e);
    for (const auto& [b, es] : by_boundary) {
      std::vector<std::string> listed;
      for (const auto& t : enumerate(sig, b, n)) listed.push_back(enc(t));
      EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
      EXPECT_EQ(std::set<std::string>(listed.begin(), listed.end()), es) << to_string(b);
    }
  }
}

// Grafting two enumerated trees lands in the enumeration at the summed size.
TEST(FreeEnumerate, ClosedUnderGraft) {
  auto sig = two_ops();
  auto small = enumerate_all(sig, 2);
  std::set<std::string> big;
  for (const auto& t : enumerate_all(sig, 4)) big.insert(enc(t));
  std::size_t grafts = 0;
  for (const auto& a : small)
    for (const auto& b : small)
      for (std::size_t i = 0; i < a.boundary.codomain.size(); ++i)
        for (std::size_t j = 0; j < b.boundary.domain.size(); ++j) {
          if (!is_planar_cut(a.boundary, i, b.boundary, j)) continue;
          auto t = graft(a, i, b, j);
          EXPECT_NO_THROW(validate(sig, t));
          EXPECT_TRUE(big.count(enc(t)));
          ++grafts;
        }
  EXPECT_GT(grafts, 0u);
}

TEST(FreeLaws, AllInstancesUpToSixNodes) {
  auto r = check_free_laws(two_ops(), 6);
  EXPECT_TRUE(r.passed());
  for (std::size_t k = 0; k < 5; ++k) EXPECT_GT(r.instances[k], 0u) << "law " << k + 1;
}

TEST(FreeExport, DotShape) {
  auto sig = two_ops();
  auto dot = to_dot(graft(generator_tree(sig, "f"), 0, generator_tree(sig, "g"), 0));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("rankdir=LR"), std::string::npos);
  EXPECT_NE(dot.find("label=\"f\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"B\""), std::string::npos);
}
