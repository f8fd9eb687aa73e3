#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polycat/rational.hpp"

namespace polycat {

using VertexSet = std::vector<Vector>;

// Adds negatives, removes duplicates and zero vectors, sorts.
VertexSet symmetrize(VertexSet vs);

// Minkowski gauge of conv(V) by exact LP. Throws NotSpanning.
Rational gauge(const VertexSet& v, const Vector& x);
// +inf when x lies outside the cone of V.
ExtendedRational gauge_extended(const VertexSet& v, const Vector& x);

// Vertices of the polar of conv(V) for symmetric V, by facet enumeration.
// Throws DimTooLarge above max_dim, Degenerate if V does not span.
VertexSet polar_vertices(const VertexSet& v, std::size_t max_dim = 4);

class PolytopeNorm {
 public:
  // Both lists are symmetrized, then the duality certificate is checked
  // (InvariantError on failure).
  static PolytopeNorm from_pair(VertexSet vertices, VertexSet dual_vertices);
  // The other list is computed by polar_vertices; the given list is reduced to
  // its extreme points.
  static PolytopeNorm from_vertices(VertexSet vertices);
  static PolytopeNorm from_dual_vertices(VertexSet dual_vertices);

  static PolytopeNorm l1(std::size_t dim);
  static PolytopeNorm linf(std::size_t dim);
  // sum_k |x_k| * w_k, weights positive.
  static PolytopeNorm weighted_l1(const Vector& weights);
  // x -> r * |x|, r positive: vertices divided by r, dual vertices multiplied.
  static PolytopeNorm scaled(const PolytopeNorm& n, const Rational& r);

  std::size_t dim() const { return dim_; }
  const VertexSet& vertices() const { return vertices_; }
  const VertexSet& dual_vertices() const { return dual_; }

  // max over dual vertices of |f(x)|.
  Rational norm(const Vector& x) const;
  // max over vertices of |phi(v)|.
  Rational dual_norm(const Vector& phi) const;

  // Symmetry, spanning, and mutual polarity.
  void verify() const;

  std::vector<std::string> lines() const;

 private:
  std::size_t dim_ = 0;
  VertexSet vertices_;
  VertexSet dual_;
};

Rational dual_norm_eval(const PolytopeNorm& n, const Vector& phi);

}  // namespace polycat
