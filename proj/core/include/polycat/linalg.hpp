#pragma once

#include <cstddef>
#include <optional>

#include "polycat/rational.hpp"

namespace polycat {

struct RowEchelon {
  Matrix rows;                        // reduced, zero rows dropped
  std::vector<std::size_t> pivots;    // pivot column of each row
};

RowEchelon rref(Matrix m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);

// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m, std::size_t cols);
// Basis of the span of the given vectors, in reduced form.
std::vector<Vector> span_basis(const std::vector<Vector>& vs, std::size_t dim);
bool in_span(const std::vector<Vector>& basis, const Vector& x);

// Unique solution of the square system, or nullopt if singular.
std::optional<Vector> solve_square(Matrix a, Vector b);

Matrix transpose(const Matrix& m, std::size_t cols);

}  // namespace polycat
