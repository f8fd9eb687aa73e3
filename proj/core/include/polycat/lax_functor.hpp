#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polycat/distributor.hpp"
#include "polycat/functor.hpp"
#include "polycat/polycategory.hpp"

namespace polycat {

// Output i of f cut into input j of g.
struct CompositionKey {
  PolyMap f;
  std::size_t i = 0;
  PolyMap g;
  std::size_t j = 0;

  auto operator<=>(const CompositionKey&) const = default;
};

std::string to_string(const CompositionKey& k);

// F : B^op -> Dist on finite data. A base polymap f : A_1..A_m -> B_1..B_n
// gets a distributor whose inputs are the fibres over the A's and whose
// outputs are the fibres over the B's; an element at (S ; R) plays the role
// of a map R -> S lying over f.
struct LaxNormalFunctor {
  std::string name;
  PolycatPtr base;
  std::map<ObjectId, CatPtr> fibres;
  std::map<PolyMap, DistPtr> dists;
  // Element of F(id_A) at (S ; R) -> morphism R -> S of F(A).
  std::map<ObjectId, std::vector<std::size_t>> normality;
  // (element of F(f), element of F(g)) -> element of F(g after f), for every
  // pair matching at the cut.
  std::map<CompositionKey, std::map<std::pair<std::size_t, std::size_t>, std::size_t>> mu;

  const FinCategory& fibre(const ObjectId& a) const;
  const FinDistributor& dist(const PolyMap& f) const;
  std::size_t mu_at(const CompositionKey& k, std::size_t x, std::size_t y) const;
};

struct ElementCheckReport {
  std::string subject;
  std::map<std::string, std::size_t> checked;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // the first max_listed, in discovery order

  static constexpr std::size_t max_listed = 64;
  bool passed() const { return failure_count == 0; }
  void fail(const std::string& what);
  std::vector<std::string> lines() const;
};

// Structure, well-definedness of mu on coend classes, naturality of mu in
// every context variable, unit triangles against the normality isos, the
// normality isos themselves, and mu across each in-scope instance of the
// associativity and interchange laws.
ElementCheckReport check_lax_normal(const LaxNormalFunctor& f);

// The fibres functor of p: fibres of objects and unary maps over identities,
// distributors of maps over each base polymap, composition in the source.
LaxNormalFunctor fibres_functor(const PolyFunctor& p);

// Every fibre a single object and every distributor a singleton at every tuple.
LaxNormalFunctor singleton_functor(const PolycatPtr& base);

}  // namespace polycat
