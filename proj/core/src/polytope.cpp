#include "polycat/polytope.hpp"

#include <algorithm>
#include <functional>

#include "polycat/error.hpp"
#include "polycat/linalg.hpp"
#include "polycat/simplex.hpp"

namespace polycat {
namespace {

std::size_t common_dim(const VertexSet& vs) {
  if (vs.empty()) fail(ErrorCode::NotSpanning, "empty vertex list");
  std::size_t d = vs.front().size();
  for (const auto& v : vs)
    if (v.size() != d) fail(ErrorCode::DimMismatch, "vertex " + to_string(v) + " in dimension " + std::to_string(d));
  return d;
}

// Sign-normalized representative: first nonzero coordinate positive.
bool positive_lead(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

Rational max_abs_dot(const VertexSet& fs, const Vector& x) {
  Rational best = 0;
  for (const auto& f : fs) {
    Rational d = abs(dot(f, x));
    if (d > best) best = d;
  }
  return best;
}

}  // namespace

VertexSet symmetrize(VertexSet vs) {
  VertexSet out;
  for (auto& v : vs) {
    if (is_zero(v)) continue;
    out.push_back(negated(v));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtendedRational gauge_extended(const VertexSet& v, const Vector& x) {
  if (is_zero(x)) return ExtendedRational::finite(0);
  if (v.empty()) return ExtendedRational::inf();
  const std::size_t d = common_dim(v);
  if (x.size() != d) fail(ErrorCode::DimMismatch, "vector " + to_string(x) + " against vertices of dimension " + std::to_string(d));
  Matrix a(d, Vector(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t r = 0; r < d; ++r) a[r][k] = v[k][r];
  LpResult lp = minimize(Vector(v.size(), 1), a, x);
  if (lp.status != LpStatus::Optimal) return ExtendedRational::inf();
  return ExtendedRational::finite(lp.value);
}

Rational gauge(const VertexSet& v, const Vector& x) {
  const std::size_t d = common_dim(v);
  if (rank(v, d) < d) fail(ErrorCode::NotSpanning, "vertices span less than dimension " + std::to_string(d));
  ExtendedRational g = gauge_extended(v, x);
  if (g.infinite) fail(ErrorCode::NotSpanning, to_string(x) + " lies outside the cone of the vertices");
  return g.value;
}

VertexSet polar_vertices(const VertexSet& v, std::size_t max_dim) {
  const std::size_t d = common_dim(v);
  if (d > max_dim) fail(ErrorCode::DimTooLarge, "polar enumeration limited to dimension " + std::to_string(max_dim));
  VertexSet reps;
  for (const auto& x : symmetrize(v))
    if (positive_lead(x)) reps.push_back(x);
  if (rank(reps, d) < d) fail(ErrorCode::Degenerate, "vertex cloud does not span dimension " + std::to_string(d));

  VertexSet found;
  std::vector<std::size_t> pick(d);
  // Enumerate d-subsets of representatives; signs go in the right-hand side.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t from) {
    if (k == d) {
      Matrix a(d);
      for (std::size_t r = 0; r < d; ++r) a[r] = reps[pick[r]];
      if (rank(a, d) < d) return;
      for (std::size_t mask = 0; mask < (std::size_t{1} << (d - 1)); ++mask) {
        Vector rhs(d, 1);
        for (std::size_t r = 1; r < d; ++r)
          if (mask & (std::size_t{1} << (r - 1))) rhs[r] = -1;
        auto f = solve_square(a, rhs);
        if (!f) continue;
        if (max_abs_dot(reps, *f) != 1) continue;
        found.push_back(*f);
      }
      return;
    }
    for (std::size_t t = from; t + (d - k) <= reps.size(); ++t) {
      pick[k] = t;
      rec(k + 1, t + 1);
    }
  };
  rec(0, 0);
  return symmetrize(std::move(found));
}

PolytopeNorm PolytopeNorm::from_pair(VertexSet vertices, VertexSet dual_vertices) {
  PolytopeNorm n;
  n.vertices_ = symmetrize(std::move(vertices));
  n.dual_ = symmetrize(std::move(dual_vertices));
  n.dim_ = common_dim(n.vertices_);
  n.verify();
  return n;
}

PolytopeNorm PolytopeNorm::from_vertices(VertexSet vertices) {
  VertexSet f = polar_vertices(vertices);
  VertexSet v = polar_vertices(f);
  return from_pair(std::move(v), std::move(f));
}

PolytopeNorm PolytopeNorm::from_dual_vertices(VertexSet dual_vertices) {
  VertexSet v = polar_vertices(dual_vertices);
  VertexSet f = polar_vertices(v);
  return from_pair(std::move(v), std::move(f));
}

PolytopeNorm PolytopeNorm::l1(std::size_t dim) {
  if (dim == 0) fail(ErrorCode::NotSpanning, "dimension must be positive");
  VertexSet v, f;
  for (std::size_t k = 0; k < dim; ++k) {
    Vector e(dim, 0);
    e[k] = 1;
    v.push_back(e);
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Vector s(dim, 1);
    for (std::size_t k = 0; k < dim; ++k)
      if (mask & (std::size_t{1} << k)) s[k] = -1;
    f.push_back(s);
  }
  return from_pair(std::move(v), std::move(f));
}

PolytopeNorm PolytopeNorm::linf(std::size_t dim) {
  PolytopeNorm n = l1(dim);
  return from_pair(n.dual_, n.vertices_);
}

PolytopeNorm PolytopeNorm::weighted_l1(const Vector& weights) {
  const std::size_t dim = weights.size();
  if (dim == 0) fail(ErrorCode::NotSpanning, "dimension must be positive");
  for (const auto& w : weights)
    if (w <= 0) fail(ErrorCode::InvariantError, "weights must be positive");
  VertexSet v, f;
  for (std::size_t k = 0; k < dim; ++k) {
    Vector e(dim, 0);
    e[k] = 1 / weights[k];
    v.push_back(e);
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Vector s(weights);
    for (std::size_t k = 0; k < dim; ++k)
      if (mask & (std::size_t{1} << k)) s[k] = -s[k];
    f.push_back(s);
  }
  return from_pair(std::move(v), std::move(f));
}

PolytopeNorm PolytopeNorm::scaled(const PolytopeNorm& n, const Rational& r) {
  if (r <= 0) fail(ErrorCode::InvariantError, "scale must be positive");
  VertexSet v, f;
  for (const auto& x : n.vertices_) v.push_back(scaled_vector(x, 1 / r));
  for (const auto& x : n.dual_) f.push_back(scaled_vector(x, r));
  return from_pair(std::move(v), std::move(f));
}

Rational PolytopeNorm::norm(const Vector& x) const {
  if (x.size() != dim_) fail(ErrorCode::DimMismatch, "vector of size " + std::to_string(x.size()) + " for a norm of dimension " + std::to_string(dim_));
  return max_abs_dot(dual_, x);
}

Rational PolytopeNorm::dual_norm(const Vector& phi) const {
  if (phi.size() != dim_) fail(ErrorCode::DimMismatch, "covector of size " + std::to_string(phi.size()) + " for a norm of dimension " + std::to_string(dim_));
  return max_abs_dot(vertices_, phi);
}

void PolytopeNorm::verify() const {
  for (const auto* set : {&vertices_, &dual_}) {
    for (const auto& x : *set) {
      if (x.size() != dim_) fail(ErrorCode::InvariantError, "mixed dimensions in norm data");
      if (!std::binary_search(set->begin(), set->end(), negated(x)))
        fail(ErrorCode::InvariantError, "list is not closed under negation at " + to_string(x));
    }
    if (rank(*set, dim_) < dim_) fail(ErrorCode::InvariantError, "list does not span dimension " + std::to_string(dim_));
  }
  for (const auto& v : vertices_)
    if (max_abs_dot(dual_, v) != 1) fail(ErrorCode::InvariantError, "duality certificate fails at vertex " + to_string(v));
  for (const auto& f : dual_)
    if (max_abs_dot(vertices_, f) != 1) fail(ErrorCode::InvariantError, "duality certificate fails at dual vertex " + to_string(f));
}

std::vector<std::string> PolytopeNorm::lines() const {
  std::vector<std::string> out;
  out.push_back("dim " + std::to_string(dim_));
  for (const auto& v : vertices_) out.push_back("vertex " + to_string(v));
  for (const auto& f : dual_) out.push_back("dual vertex " + to_string(f));
  return out;
}

Rational dual_norm_eval(const PolytopeNorm& n, const Vector& phi) { return n.dual_norm(phi); }

}  // namespace polycat
