#include "polycat/simplex.hpp"

#include "polycat/error.hpp"

namespace polycat {
namespace {

// Tableau rows 0..m-1 hold constraints with rhs in the last column; row m is
// the objective (reduced costs, negated value in the rhs).
struct Tableau {
  Matrix t;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // variable columns
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k == r || t[k][c] == 0) continue;
      Rational f = t[k][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) t[k][j] -= f * t[r][j];
    }
    basis[r] = c;
    ++pivots;
  }

  // Bland's rule over the allowed columns. Returns false when unbounded.
  bool run(std::size_t allowed) {
    const std::size_t m = basis.size();
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t c = 0; c < allowed; ++c)
        if (t[m][c] < 0) {
          enter = c;
          break;
        }
      if (enter == allowed) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t r = 0; r < m; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][cols] / t[r][enter];
        if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult minimize(const Vector& c, const Matrix& a, const Vector& b) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) fail(ErrorCode::DimMismatch, "LP right-hand side size mismatch");
  for (const auto& row : a)
    if (row.size() != n) fail(ErrorCode::DimMismatch, "LP row size mismatch");

  Tableau tab;
  tab.cols = n + m;
  tab.t.assign(m + 1, Vector(n + m + 1, 0));
  tab.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    bool flip = b[r] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[r][j] = flip ? Rational(-a[r][j]) : a[r][j];
    tab.t[r][n + r] = 1;
    tab.t[r][n + m] = flip ? Rational(-b[r]) : b[r];
    tab.basis[r] = n + r;
  }
  // Phase one objective: sum of artificials, expressed in the non-basic columns.
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n + m; ++j)
      if (j < n || j == n + m) tab.t[m][j] -= tab.t[r][j];
  tab.run(n + m);

  LpResult out;
  if (tab.t[m][n + m] != 0) {
    out.status = LpStatus::Infeasible;
    out.pivots = tab.pivots;
    return out;
  }
  // Drive artificials out of the basis; rows where that is impossible are redundant.
  std::vector<bool> redundant(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    std::size_t c = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t[r][j] != 0) {
        c = j;
        break;
      }
    if (c == n)
      redundant[r] = true;
    else
      tab.pivot(r, c);
  }
  Tableau p2;
  p2.cols = n;
  for (std::size_t r = 0; r < m; ++r) {
    if (redundant[r]) continue;
    Vector row(tab.t[r].begin(), tab.t[r].begin() + static_cast<std::ptrdiff_t>(n));
    row.push_back(tab.t[r][n + m]);
    p2.t.push_back(std::move(row));
    p2.basis.push_back(tab.basis[r]);
  }
  Vector obj(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  for (std::size_t r = 0; r < p2.basis.size(); ++r) {
    Rational cb = c[p2.basis[r]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) obj[j] -= cb * p2.t[r][j];
  }
  p2.t.push_back(std::move(obj));
  p2.pivots = tab.pivots;
  bool bounded = p2.run(n);
  out.pivots = p2.pivots;
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x.assign(n, 0);
  for (std::size_t r = 0; r < p2.basis.size(); ++r) out.x[p2.basis[r]] = p2.t[r][n];
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  return out;
}

}  // namespace polycat
