#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polycat/polytope.hpp"
#include "polycat/rational.hpp"

namespace polycat {

struct NormCaps {
  std::size_t max_dim = 4;    // per factor
  std::size_t max_order = 3;  // tensor order / polylinear arity per side
};

// Coefficients in row-major order over factor indices.
struct TensorElement {
  std::vector<std::size_t> dims;
  Vector coeffs;

  static TensorElement zero(std::vector<std::size_t> dims);
  static TensorElement elementary(const std::vector<Vector>& factors);
  std::size_t size() const { return coeffs.size(); }
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator*(const Rational& s) const;
  bool operator==(const TensorElement& o) const = default;
};

std::string to_string(const TensorElement& u);

// Coefficient c[i1..im, j1..jn] = (e*_j1,...,e*_jn) f (e_i1,...,e_im).
struct PolyLinearMap {
  std::vector<std::size_t> inputs;
  std::vector<std::size_t> outputs;
  Vector coeffs;

  static PolyLinearMap zero(std::vector<std::size_t> inputs, std::vector<std::size_t> outputs);
  static PolyLinearMap identity(std::size_t dim);

  std::size_t arity() const { return inputs.size() + outputs.size(); }
  std::vector<std::size_t> axes() const;  // inputs then outputs
  Rational& at(const std::vector<std::size_t>& index);
  const Rational& at(const std::vector<std::size_t>& index) const;

  // (phi_1..phi_n) f (a_1..a_m).
  Rational evaluate(const std::vector<Vector>& states, const std::vector<Vector>& effects) const;
  // The covector x -> (effects) f (states[..j), x, states[j..)); states omits slot j.
  Vector input_functional(std::size_t j, const std::vector<Vector>& states, const std::vector<Vector>& effects) const;
  // The vector in output i given by (effects[..i), -, effects[i..)) f (states).
  Vector output_vector(std::size_t i, const std::vector<Vector>& states, const std::vector<Vector>& effects) const;

  PolyLinearMap operator*(const Rational& s) const;
  bool operator==(const PolyLinearMap& o) const = default;
};

// g after f, cutting f's output i into g's input j (no planarity restriction).
PolyLinearMap compose(const PolyLinearMap& f, std::size_t i, const PolyLinearMap& g, std::size_t j);

Rational projective_norm(const TensorElement& u, const std::vector<PolytopeNorm>& norms, const NormCaps& caps = {});
Rational injective_norm(const TensorElement& u, const std::vector<PolytopeNorm>& norms, const NormCaps& caps = {});

// All v_1 (x) ... (x) v_n, deduplicated.
VertexSet product_vertices(const std::vector<const VertexSet*>& factors);
// Unit balls as polytope norms on the tensor space (dimension at most 4).
PolytopeNorm projective_polytope(const std::vector<PolytopeNorm>& norms);
PolytopeNorm injective_polytope(const std::vector<PolytopeNorm>& norms);

struct CrossnormDecision {
  bool holds = true;
  int failed_condition = 0;           // 1: elementary vectors, 2: elementary functionals
  std::vector<std::size_t> witness;   // factor vertex (or dual vertex) indices
  Rational witness_value;

  std::vector<std::string> lines() const;
};

CrossnormDecision is_crossnorm(const PolytopeNorm& candidate, const std::vector<PolytopeNorm>& factors);

struct ContractivityDecision {
  bool holds = true;
  std::vector<std::size_t> input_witness;   // vertex index per input
  std::vector<std::size_t> output_witness;  // dual vertex index per output
  Rational witness_value;

  std::vector<std::string> lines() const;
};

// Sweeps input-vertex tuples (outer) and dual-output-vertex tuples (inner).
ContractivityDecision is_contractive(const PolyLinearMap& f, const std::vector<const VertexSet*>& input_vertices,
                                     const std::vector<const VertexSet*>& output_dual_vertices);
ContractivityDecision is_contractive(const PolyLinearMap& f, const std::vector<PolytopeNorm>& input_norms,
                                     const std::vector<PolytopeNorm>& output_norms);

struct UniversalMaps {
  PolyLinearMap m;                  // A1..An -> A1 (x) ... (x) An
  PolyLinearMap w;                  // A1 (x) ... (x) An -> A1..An
  std::vector<PolyLinearMap> rcup;  // . -> Ak, Ak*
  std::vector<PolyLinearMap> rcap;  // Ak*, Ak -> .
};

UniversalMaps universal_map_tensors(const std::vector<std::size_t>& dims);
PolyLinearMap cup_map(std::size_t dim);
PolyLinearMap cap_map(std::size_t dim);

struct CrossnormEquivalence {
  CrossnormDecision crossnorm;
  ContractivityDecision m_contractive;
  ContractivityDecision w_contractive;
  bool witnesses_match = true;  // each side's witness violates the other side's condition

  bool contractive() const { return m_contractive.holds && w_contractive.holds; }
  bool agree() const { return crossnorm.holds == contractive() && witnesses_match; }
  std::vector<std::string> lines() const;
};

CrossnormEquivalence crossnorm_contractive_equivalence(const PolytopeNorm& candidate,
                                                       const std::vector<PolytopeNorm>& factors);

std::vector<Vector> A_kernel(const PolyLinearMap& g, std::size_t j);
bool is_A_injective(const PolyLinearMap& g, std::size_t j);
std::vector<Vector> A_image(const PolyLinearMap& f, std::size_t i);
bool is_A_surjective(const PolyLinearMap& f, std::size_t i);

// x -> max |(phi) g (a1, x, a2)| over context vertices and dual output vertices.
struct PulledNorm {
  std::size_t dim = 0;
  bool seminorm = false;                  // g is not injective at the slot
  VertexSet covectors;                    // symmetric; generates the dual ball
  std::optional<PolytopeNorm> polytope;   // when a norm and dim <= 4

  Rational value(const Vector& x) const;
};

PulledNorm pullback_norm(const PolyLinearMap& g, std::size_t j, const std::vector<PolytopeNorm>& context_inputs,
                         const std::vector<PolytopeNorm>& outputs);

// Gauge over { (phi1, -, phi2) f (a) } at output i.
struct PushedNorm {
  std::size_t dim = 0;
  bool extended = false;                // f is not surjective at the slot
  VertexSet vertices;                   // symmetric; generates the unit ball
  std::vector<Vector> image;            // basis of the image at the slot
  std::optional<PolytopeNorm> polytope;  // when not extended and dim <= 4

  ExtendedRational value(const Vector& y) const;
};

PushedNorm pushforward_norm(const PolyLinearMap& f, std::size_t i, const std::vector<PolytopeNorm>& inputs,
                            const std::vector<PolytopeNorm>& context_outputs);

enum class FactorizationKind { PushAlongM, PullAlongW, Identity };

struct FactorizationReport {
  FactorizationKind kind = FactorizationKind::Identity;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Samples contractive maps g : A,B -> C (push) or f : C -> A,B (pull), checks
// the factored map g/m or w\f is contractive for the computed norm on A (x) B.
FactorizationReport factorization_check(FactorizationKind kind, const PolytopeNorm& a, const PolytopeNorm& b,
                                        const PolytopeNorm& c, std::size_t samples, std::uint64_t seed);

Rational random_rational(std::mt19937_64& rng, int max_abs = 3, int max_den = 3);
TensorElement random_tensor(const std::vector<std::size_t>& dims, std::mt19937_64& rng);
PolyLinearMap random_map(const std::vector<std::size_t>& inputs, const std::vector<std::size_t>& outputs,
                         std::mt19937_64& rng);
// Divides by the largest sweep value so the map is exactly contractive (or zero).
PolyLinearMap normalize_contractive(const PolyLinearMap& f, const std::vector<PolytopeNorm>& inputs,
                                    const std::vector<PolytopeNorm>& outputs);

}  // namespace polycat
