#include "polycat/linalg.hpp"

#include <regex>

#include "polycat/error.hpp"

namespace polycat {

std::string to_string(const Rational& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) fail(ErrorCode::SyntaxError, "not a rational: \"" + text + "\"");
  mpz_class num(m[1].str());
  mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) fail(ErrorCode::SyntaxError, "zero denominator in \"" + text + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += to_string(v[k]);
  }
  return out + ")";
}

std::string to_string(const ExtendedRational& q) { return q.infinite ? "inf" : to_string(q.value); }

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimMismatch, "dot of sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Vector scaled_vector(const Vector& v, const Rational& s) {
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * s;
  return out;
}

Vector negated(const Vector& v) { return scaled_vector(v, Rational(-1)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RowEchelon rref(Matrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][c] == 0) continue;
      Rational f = m[k][c];
      for (std::size_t t = c; t < cols; ++t) m[k][t] -= f * m[r][t];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
  RowEchelon e = rref(m, cols);
  std::vector<bool> pivot(cols, false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot[free]) continue;
    Vector x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = -e.rows[r][free];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vs, std::size_t dim) {
  for (const auto& v : vs)
    if (v.size() != dim) fail(ErrorCode::DimMismatch, "vector of size " + std::to_string(v.size()) + " in dimension " + std::to_string(dim));
  return rref(vs, dim).rows;
}

bool in_span(const std::vector<Vector>& basis, const Vector& x) {
  if (basis.empty()) return is_zero(x);
  Matrix m = basis;
  m.push_back(x);
  return rank(m, x.size()) == rank(basis, x.size());
}

std::optional<Vector> solve_square(Matrix a, Vector b) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) a[r].push_back(b[r]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (std::size_t t = c; t <= n; ++t) a[c][t] *= inv;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c || a[k][c] == 0) continue;
      Rational f = a[k][c];
      for (std::size_t t = c; t <= n; ++t) a[k][t] -= f * a[c][t];
    }
  }
  Vector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n];
  return x;
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols, Vector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
  return t;
}

}  // namespace polycat
