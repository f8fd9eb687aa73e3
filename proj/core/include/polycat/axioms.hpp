#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "polycat/polycategory.hpp"
#include "polycat/scope.hpp"

namespace polycat {

struct Counterexample {
  int law = 0;  // 1..5
  std::string witness;

  auto operator<=>(const Counterexample&) const = default;
};

struct AxiomReport {
  std::string presentation;
  std::size_t bound = 0;
  bool bound_relative = false;
  std::array<std::size_t, 5> instances{};
  std::vector<Counterexample> counterexamples;  // sorted

  bool passed() const { return counterexamples.empty(); }
  bool fails_law(int law) const;
  std::vector<std::string> lines() const;
};

// One in-scope instance of an associativity or interchange law, as scope indices.
//   3: f out i into g in j, then g out k into h in l.
//   4: f out i into h in j, g out k into h in l, j < l.
//   5: f out i into g in j, f out k into h in l, i < k.
// lhs and rhs are the two bracketings; they agree when the law holds.
struct LawInstance {
  int law = 0;
  std::size_t f = 0, i = 0, g = 0, j = 0, h = 0, k = 0, l = 0;
  std::size_t lhs = 0, rhs = 0;
};

// Every instance of laws 3, 4, 5 whose terms all stay within the scope's bound.
void for_each_law_instance(const Scope& s, const std::function<void(const LawInstance&)>& visit);

// Unit laws (1), (2), associativity (3) and the two interchange laws (4), (5).
// A germ is checked on every instance whose terms all stay within its bound;
// a monoid presentation is checked once per law over all element tuples, which
// covers every arity since composites only depend on the labels.
AxiomReport check_axioms(const FinPolycategory& p);

}  // namespace polycat
