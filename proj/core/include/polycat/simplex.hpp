#pragma once

#include <cstddef>

#include "polycat/rational.hpp"

namespace polycat {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vector x;
  std::size_t pivots = 0;
};

// min c.x subject to a x = b, x >= 0. Two-phase tableau simplex, exact
// arithmetic, Bland's rule.
LpResult minimize(const Vector& c, const Matrix& a, const Vector& b);

}  // namespace polycat
