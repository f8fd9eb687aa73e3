#include "polycat/tensor_norms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "polycat/error.hpp"
#include "polycat/linalg.hpp"

namespace polycat {
namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t flat_index(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& idx) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
  return f;
}

std::vector<std::size_t> unflatten(const std::vector<std::size_t>& dims, std::size_t f) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = f % dims[k];
    f /= dims[k];
  }
  return idx;
}

Vector kron(const std::vector<Vector>& vs) {
  Vector out{Rational(1)};
  for (const auto& v : vs) {
    Vector next;
    next.reserve(out.size() * v.size());
    for (const auto& a : out)
      for (const auto& b : v) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

// Contract the leading axis with v.
Vector contract_front(const Vector& c, std::vector<std::size_t>& axes, const Vector& v) {
  const std::size_t d = axes.front();
  if (v.size() != d) fail(ErrorCode::DimMismatch, "argument of size " + std::to_string(v.size()) + " for an axis of size " + std::to_string(d));
  const std::size_t rest = c.size() / d;
  Vector out(rest, 0);
  for (std::size_t k = 0; k < d; ++k) {
    if (v[k] == 0) continue;
    for (std::size_t r = 0; r < rest; ++r)
      if (c[k * rest + r] != 0) out[r] += v[k] * c[k * rest + r];
  }
  axes.erase(axes.begin());
  return out;
}

// Contract the trailing axis with v.
Vector contract_back(const Vector& c, std::vector<std::size_t>& axes, const Vector& v) {
  const std::size_t d = axes.back();
  if (v.size() != d) fail(ErrorCode::DimMismatch, "argument of size " + std::to_string(v.size()) + " for an axis of size " + std::to_string(d));
  const std::size_t rest = c.size() / d;
  Vector out(rest, 0);
  for (std::size_t r = 0; r < rest; ++r)
    for (std::size_t k = 0; k < d; ++k)
      if (v[k] != 0 && c[r * d + k] != 0) out[r] += v[k] * c[r * d + k];
  axes.pop_back();
  return out;
}

// Calls body with one index per list, last list varying fastest. Stops when body returns false.
void sweep(const std::vector<const VertexSet*>& lists, const std::function<bool(const std::vector<std::size_t>&)>& body) {
  for (const auto* l : lists)
    if (l->empty()) return;
  std::vector<std::size_t> idx(lists.size(), 0);
  for (;;) {
    if (!body(idx)) return;
    std::size_t k = lists.size();
    while (k > 0) {
      --k;
      if (++idx[k] < lists[k]->size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (lists.empty()) return;
  }
}

std::vector<Vector> pick(const std::vector<const VertexSet*>& lists, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < lists.size(); ++k) out.push_back((*lists[k])[idx[k]]);
  return out;
}

std::vector<std::size_t> dims_of(const std::vector<PolytopeNorm>& ns) {
  std::vector<std::size_t> d;
  for (const auto& n : ns) d.push_back(n.dim());
  return d;
}

std::vector<const VertexSet*> vertex_lists(const std::vector<PolytopeNorm>& ns) {
  std::vector<const VertexSet*> out;
  for (const auto& n : ns) out.push_back(&n.vertices());
  return out;
}

std::vector<const VertexSet*> dual_lists(const std::vector<PolytopeNorm>& ns) {
  std::vector<const VertexSet*> out;
  for (const auto& n : ns) out.push_back(&n.dual_vertices());
  return out;
}

void check_tensor(const TensorElement& u, const std::vector<PolytopeNorm>& norms, const NormCaps& caps) {
  if (norms.size() > caps.max_order) fail(ErrorCode::DimTooLarge, "tensor order " + std::to_string(norms.size()) + " exceeds " + std::to_string(caps.max_order));
  for (const auto& n : norms)
    if (n.dim() > caps.max_dim) fail(ErrorCode::DimTooLarge, "factor dimension " + std::to_string(n.dim()) + " exceeds " + std::to_string(caps.max_dim));
  if (u.dims != dims_of(norms)) fail(ErrorCode::DimMismatch, "tensor dimensions do not match the factor norms");
  if (u.coeffs.size() != product(u.dims)) fail(ErrorCode::DimMismatch, "tensor coefficient count does not match its dimensions");
}

std::string indices(const std::vector<std::size_t>& idx) {
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + "]";
}

void check_map_dims(const PolyLinearMap& f, const std::vector<std::size_t>& in, const std::vector<std::size_t>& out) {
  if (f.inputs != in || f.outputs != out) fail(ErrorCode::DimMismatch, "norm dimensions do not match the polylinear map");
}

}  // namespace

TensorElement TensorElement::zero(std::vector<std::size_t> dims) {
  TensorElement u;
  u.coeffs.assign(product(dims), 0);
  u.dims = std::move(dims);
  return u;
}

TensorElement TensorElement::elementary(const std::vector<Vector>& factors) {
  TensorElement u;
  for (const auto& v : factors) u.dims.push_back(v.size());
  u.coeffs = kron(factors);
  return u;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  if (dims != o.dims) fail(ErrorCode::DimMismatch, "adding tensors of different shapes");
  TensorElement u = *this;
  for (std::size_t k = 0; k < coeffs.size(); ++k) u.coeffs[k] += o.coeffs[k];
  return u;
}

TensorElement TensorElement::operator*(const Rational& s) const {
  TensorElement u = *this;
  for (auto& c : u.coeffs) c *= s;
  return u;
}

std::string to_string(const TensorElement& u) { return to_string(u.coeffs); }

PolyLinearMap PolyLinearMap::zero(std::vector<std::size_t> inputs, std::vector<std::size_t> outputs) {
  PolyLinearMap f;
  f.inputs = std::move(inputs);
  f.outputs = std::move(outputs);
  f.coeffs.assign(product(f.axes()), 0);
  return f;
}

PolyLinearMap PolyLinearMap::identity(std::size_t dim) {
  PolyLinearMap f = zero({dim}, {dim});
  for (std::size_t k = 0; k < dim; ++k) f.at({k, k}) = 1;
  return f;
}

std::vector<std::size_t> PolyLinearMap::axes() const {
  std::vector<std::size_t> a = inputs;
  a.insert(a.end(), outputs.begin(), outputs.end());
  return a;
}

Rational& PolyLinearMap::at(const std::vector<std::size_t>& index) { return coeffs[flat_index(axes(), index)]; }
const Rational& PolyLinearMap::at(const std::vector<std::size_t>& index) const {
  return coeffs[flat_index(axes(), index)];
}

Rational PolyLinearMap::evaluate(const std::vector<Vector>& states, const std::vector<Vector>& effects) const {
  if (states.size() != inputs.size() || effects.size() != outputs.size())
    fail(ErrorCode::DimMismatch, "wrong number of arguments for a polylinear map");
  auto ax = axes();
  Vector c = coeffs;
  for (const auto& a : states) c = contract_front(c, ax, a);
  for (const auto& p : effects) c = contract_front(c, ax, p);
  return c.front();
}

Vector PolyLinearMap::input_functional(std::size_t j, const std::vector<Vector>& states,
                                       const std::vector<Vector>& effects) const {
  if (j >= inputs.size()) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(j));
  if (states.size() + 1 != inputs.size() || effects.size() != outputs.size())
    fail(ErrorCode::DimMismatch, "wrong number of arguments for a polylinear map");
  auto ax = axes();
  Vector c = coeffs;
  for (std::size_t k = effects.size(); k-- > 0;) c = contract_back(c, ax, effects[k]);
  for (std::size_t k = states.size(); k-- > j;) c = contract_back(c, ax, states[k]);
  for (std::size_t k = 0; k < j; ++k) c = contract_front(c, ax, states[k]);
  return c;
}

Vector PolyLinearMap::output_vector(std::size_t i, const std::vector<Vector>& states,
                                    const std::vector<Vector>& effects) const {
  if (i >= outputs.size()) fail(ErrorCode::IndexOutOfRange, "output " + std::to_string(i));
  if (states.size() != inputs.size() || effects.size() + 1 != outputs.size())
    fail(ErrorCode::DimMismatch, "wrong number of arguments for a polylinear map");
  auto ax = axes();
  Vector c = coeffs;
  for (const auto& a : states) c = contract_front(c, ax, a);
  for (std::size_t k = 0; k < i; ++k) c = contract_front(c, ax, effects[k]);
  for (std::size_t k = effects.size(); k-- > i;) c = contract_back(c, ax, effects[k]);
  return c;
}

PolyLinearMap PolyLinearMap::operator*(const Rational& s) const {
  PolyLinearMap f = *this;
  for (auto& c : f.coeffs) c *= s;
  return f;
}

PolyLinearMap compose(const PolyLinearMap& f, std::size_t i, const PolyLinearMap& g, std::size_t j) {
  if (i >= f.outputs.size()) fail(ErrorCode::IndexOutOfRange, "output " + std::to_string(i));
  if (j >= g.inputs.size()) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(j));
  if (f.outputs[i] != g.inputs[j]) fail(ErrorCode::TypeMismatch, "cut dimensions differ");
  const std::size_t gi = g.inputs.size(), fi = f.inputs.size(), fo = f.outputs.size(), go = g.outputs.size();
  std::vector<std::size_t> in(g.inputs.begin(), g.inputs.begin() + static_cast<std::ptrdiff_t>(j));
  in.insert(in.end(), f.inputs.begin(), f.inputs.end());
  in.insert(in.end(), g.inputs.begin() + static_cast<std::ptrdiff_t>(j) + 1, g.inputs.end());
  std::vector<std::size_t> out(f.outputs.begin(), f.outputs.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), g.outputs.begin(), g.outputs.end());
  out.insert(out.end(), f.outputs.begin() + static_cast<std::ptrdiff_t>(i) + 1, f.outputs.end());
  PolyLinearMap r = PolyLinearMap::zero(in, out);
  const auto rax = r.axes();
  const std::size_t d = f.outputs[i];
  std::vector<std::size_t> fidx(fi + fo), gidx(gi + go);
  for (std::size_t flat = 0; flat < r.coeffs.size(); ++flat) {
    auto idx = unflatten(rax, flat);
    // result inputs: g[0,j) f[all] g(j..]; outputs: f[0,i) g[all] f(i..]
    for (std::size_t k = 0; k < j; ++k) gidx[k] = idx[k];
    for (std::size_t k = 0; k < fi; ++k) fidx[k] = idx[j + k];
    for (std::size_t k = j + 1; k < gi; ++k) gidx[k] = idx[fi + k - 1];
    const std::size_t o = gi - 1 + fi;
    for (std::size_t k = 0; k < i; ++k) fidx[fi + k] = idx[o + k];
    for (std::size_t k = 0; k < go; ++k) gidx[gi + k] = idx[o + i + k];
    for (std::size_t k = i + 1; k < fo; ++k) fidx[fi + k] = idx[o + go + k - 1];
    Rational s = 0;
    for (std::size_t c = 0; c < d; ++c) {
      fidx[fi + i] = c;
      gidx[j] = c;
      const Rational& a = f.at(fidx);
      if (a == 0) continue;
      s += a * g.at(gidx);
    }
    r.coeffs[flat] = s;
  }
  return r;
}

VertexSet product_vertices(const std::vector<const VertexSet*>& factors) {
  VertexSet out;
  sweep(factors, [&](const std::vector<std::size_t>& idx) {
    out.push_back(kron(pick(factors, idx)));
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational projective_norm(const TensorElement& u, const std::vector<PolytopeNorm>& norms, const NormCaps& caps) {
  check_tensor(u, norms, caps);
  return gauge(product_vertices(vertex_lists(norms)), u.coeffs);
}

Rational injective_norm(const TensorElement& u, const std::vector<PolytopeNorm>& norms, const NormCaps& caps) {
  check_tensor(u, norms, caps);
  Rational best = 0;
  for (const auto& f : product_vertices(dual_lists(norms))) {
    Rational v = abs(dot(f, u.coeffs));
    if (v > best) best = v;
  }
  return best;
}

PolytopeNorm projective_polytope(const std::vector<PolytopeNorm>& norms) {
  return PolytopeNorm::from_vertices(product_vertices(vertex_lists(norms)));
}

PolytopeNorm injective_polytope(const std::vector<PolytopeNorm>& norms) {
  return PolytopeNorm::from_dual_vertices(product_vertices(dual_lists(norms)));
}

std::vector<std::string> CrossnormDecision::lines() const {
  if (holds) return {"crossnorm: yes"};
  return {"crossnorm: no", "condition " + std::to_string(failed_condition) + " fails at " + indices(witness) +
                               " with value " + to_string(witness_value)};
}

CrossnormDecision is_crossnorm(const PolytopeNorm& candidate, const std::vector<PolytopeNorm>& factors) {
  if (candidate.dim() != product(dims_of(factors)))
    fail(ErrorCode::DimMismatch, "candidate dimension does not match the factors");
  CrossnormDecision d;
  auto vs = vertex_lists(factors);
  sweep(vs, [&](const std::vector<std::size_t>& idx) {
    Rational g = gauge(candidate.vertices(), kron(pick(vs, idx)));
    if (g > 1) {
      d = CrossnormDecision{false, 1, idx, g};
      return false;
    }
    return true;
  });
  if (!d.holds) return d;
  auto fs = dual_lists(factors);
  sweep(fs, [&](const std::vector<std::size_t>& idx) {
    Rational g = dual_norm_eval(candidate, kron(pick(fs, idx)));
    if (g > 1) {
      d = CrossnormDecision{false, 2, idx, g};
      return false;
    }
    return true;
  });
  return d;
}

std::vector<std::string> ContractivityDecision::lines() const {
  if (holds) return {"contractive: yes"};
  return {"contractive: no", "inputs " + indices(input_witness) + " outputs " + indices(output_witness) +
                                 " give |value| " + to_string(witness_value)};
}

ContractivityDecision is_contractive(const PolyLinearMap& f, const std::vector<const VertexSet*>& input_vertices,
                                     const std::vector<const VertexSet*>& output_dual_vertices) {
  if (input_vertices.size() != f.inputs.size() || output_dual_vertices.size() != f.outputs.size())
    fail(ErrorCode::DimMismatch, "wrong number of norms for a polylinear map");
  ContractivityDecision d;
  sweep(input_vertices, [&](const std::vector<std::size_t>& in) {
    auto states = pick(input_vertices, in);
    sweep(output_dual_vertices, [&](const std::vector<std::size_t>& out) {
      Rational v = abs(f.evaluate(states, pick(output_dual_vertices, out)));
      if (v > 1) {
        d = ContractivityDecision{false, in, out, v};
        return false;
      }
      return true;
    });
    return d.holds;
  });
  return d;
}

ContractivityDecision is_contractive(const PolyLinearMap& f, const std::vector<PolytopeNorm>& input_norms,
                                     const std::vector<PolytopeNorm>& output_norms) {
  check_map_dims(f, dims_of(input_norms), dims_of(output_norms));
  return is_contractive(f, vertex_lists(input_norms), dual_lists(output_norms));
}

PolyLinearMap cup_map(std::size_t dim) {
  PolyLinearMap f = PolyLinearMap::zero({}, {dim, dim});
  for (std::size_t k = 0; k < dim; ++k) f.at({k, k}) = 1;
  return f;
}

PolyLinearMap cap_map(std::size_t dim) {
  PolyLinearMap f = PolyLinearMap::zero({dim, dim}, {});
  for (std::size_t k = 0; k < dim; ++k) f.at({k, k}) = 1;
  return f;
}

UniversalMaps universal_map_tensors(const std::vector<std::size_t>& dims) {
  if (dims.empty()) fail(ErrorCode::DimMismatch, "universal maps need at least one factor");
  for (auto d : dims)
    if (d == 0) fail(ErrorCode::DimMismatch, "dimensions must be positive");
  const std::size_t total = product(dims);
  UniversalMaps u;
  u.m = PolyLinearMap::zero(dims, {total});
  u.w = PolyLinearMap::zero({total}, dims);
  for (std::size_t flat = 0; flat < total; ++flat) {
    auto idx = unflatten(dims, flat);
    auto mi = idx;
    mi.push_back(flat);
    u.m.at(mi) = 1;
    std::vector<std::size_t> wi{flat};
    wi.insert(wi.end(), idx.begin(), idx.end());
    u.w.at(wi) = 1;
  }
  for (auto d : dims) {
    u.rcup.push_back(cup_map(d));
    u.rcap.push_back(cap_map(d));
  }
  return u;
}

std::vector<std::string> CrossnormEquivalence::lines() const {
  std::vector<std::string> out = crossnorm.lines();
  for (auto& l : m_contractive.lines()) out.push_back("m " + l);
  for (auto& l : w_contractive.lines()) out.push_back("w " + l);
  out.push_back(std::string("witnesses match: ") + (witnesses_match ? "yes" : "no"));
  out.push_back(std::string("agree: ") + (agree() ? "yes" : "no"));
  return out;
}

CrossnormEquivalence crossnorm_contractive_equivalence(const PolytopeNorm& candidate,
                                                       const std::vector<PolytopeNorm>& factors) {
  CrossnormEquivalence e;
  e.crossnorm = is_crossnorm(candidate, factors);
  auto u = universal_map_tensors(dims_of(factors));
  auto vs = vertex_lists(factors);
  auto fs = dual_lists(factors);
  e.m_contractive = is_contractive(u.m, vs, {&candidate.dual_vertices()});
  e.w_contractive = is_contractive(u.w, {&candidate.vertices()}, fs);

  bool match = true;
  const auto& c = e.crossnorm;
  if (c.failed_condition == 1 && (e.m_contractive.holds || e.m_contractive.input_witness != c.witness)) match = false;
  if (!e.m_contractive.holds && gauge(candidate.vertices(), kron(pick(vs, e.m_contractive.input_witness))) <= 1)
    match = false;
  if (!e.w_contractive.holds && dual_norm_eval(candidate, kron(pick(fs, e.w_contractive.output_witness))) <= 1)
    match = false;
  if (c.failed_condition == 2) {
    if (e.w_contractive.holds) match = false;
    Vector phi = kron(pick(fs, c.witness));
    bool violated = false;
    for (const auto& v : candidate.vertices())
      if (abs(dot(phi, v)) > 1) violated = true;
    if (!violated) match = false;
  }
  e.witnesses_match = match;
  return e;
}

std::vector<Vector> A_kernel(const PolyLinearMap& g, std::size_t j) {
  if (j >= g.inputs.size()) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(j));
  const auto ax = g.axes();
  const std::size_t d = ax[j];
  const std::size_t others = g.coeffs.size() / d;
  Matrix rows(others, Vector(d, 0));
  for (std::size_t flat = 0; flat < g.coeffs.size(); ++flat) {
    auto idx = unflatten(ax, flat);
    std::size_t k = idx[j];
    idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(j));
    auto oax = ax;
    oax.erase(oax.begin() + static_cast<std::ptrdiff_t>(j));
    rows[flat_index(oax, idx)][k] = g.coeffs[flat];
  }
  return nullspace(rows, d);
}

bool is_A_injective(const PolyLinearMap& g, std::size_t j) { return A_kernel(g, j).empty(); }

std::vector<Vector> A_image(const PolyLinearMap& f, std::size_t i) {
  if (i >= f.outputs.size()) fail(ErrorCode::IndexOutOfRange, "output " + std::to_string(i));
  const auto ax = f.axes();
  const std::size_t slot = f.inputs.size() + i;
  const std::size_t d = ax[slot];
  const std::size_t others = f.coeffs.size() / d;
  auto oax = ax;
  oax.erase(oax.begin() + static_cast<std::ptrdiff_t>(slot));
  std::vector<Vector> cols(others, Vector(d, 0));
  for (std::size_t flat = 0; flat < f.coeffs.size(); ++flat) {
    auto idx = unflatten(ax, flat);
    std::size_t k = idx[slot];
    idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(slot));
    cols[flat_index(oax, idx)][k] = f.coeffs[flat];
  }
  return span_basis(cols, d);
}

bool is_A_surjective(const PolyLinearMap& f, std::size_t i) {
  return A_image(f, i).size() == f.outputs[i];
}

Rational PulledNorm::value(const Vector& x) const {
  if (x.size() != dim) fail(ErrorCode::DimMismatch, "vector of size " + std::to_string(x.size()) + " for dimension " + std::to_string(dim));
  Rational best = 0;
  for (const auto& c : covectors) {
    Rational v = abs(dot(c, x));
    if (v > best) best = v;
  }
  return best;
}

PulledNorm pullback_norm(const PolyLinearMap& g, std::size_t j, const std::vector<PolytopeNorm>& context_inputs,
                         const std::vector<PolytopeNorm>& outputs) {
  if (j >= g.inputs.size()) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(j));
  auto ctx = g.inputs;
  ctx.erase(ctx.begin() + static_cast<std::ptrdiff_t>(j));
  check_map_dims(PolyLinearMap{ctx, g.outputs, {}}, dims_of(context_inputs), dims_of(outputs));
  PulledNorm p;
  p.dim = g.inputs[j];
  auto vs = vertex_lists(context_inputs);
  auto fs = dual_lists(outputs);
  VertexSet raw;
  sweep(vs, [&](const std::vector<std::size_t>& in) {
    auto states = pick(vs, in);
    sweep(fs, [&](const std::vector<std::size_t>& out) {
      raw.push_back(g.input_functional(j, states, pick(fs, out)));
      return true;
    });
    return true;
  });
  p.covectors = symmetrize(std::move(raw));
  p.seminorm = p.covectors.empty() || rank(p.covectors, p.dim) < p.dim;
  if (!p.seminorm && p.dim <= 4) p.polytope = PolytopeNorm::from_dual_vertices(p.covectors);
  return p;
}

ExtendedRational PushedNorm::value(const Vector& y) const {
  if (y.size() != dim) fail(ErrorCode::DimMismatch, "vector of size " + std::to_string(y.size()) + " for dimension " + std::to_string(dim));
  if (!in_span(image, y)) return ExtendedRational::inf();
  return gauge_extended(vertices, y);
}

PushedNorm pushforward_norm(const PolyLinearMap& f, std::size_t i, const std::vector<PolytopeNorm>& inputs,
                            const std::vector<PolytopeNorm>& context_outputs) {
  if (i >= f.outputs.size()) fail(ErrorCode::IndexOutOfRange, "output " + std::to_string(i));
  auto ctx = f.outputs;
  ctx.erase(ctx.begin() + static_cast<std::ptrdiff_t>(i));
  check_map_dims(PolyLinearMap{f.inputs, ctx, {}}, dims_of(inputs), dims_of(context_outputs));
  PushedNorm p;
  p.dim = f.outputs[i];
  auto vs = vertex_lists(inputs);
  auto fs = dual_lists(context_outputs);
  VertexSet raw;
  sweep(vs, [&](const std::vector<std::size_t>& in) {
    auto states = pick(vs, in);
    sweep(fs, [&](const std::vector<std::size_t>& out) {
      raw.push_back(f.output_vector(i, states, pick(fs, out)));
      return true;
    });
    return true;
  });
  p.vertices = symmetrize(std::move(raw));
  p.image = span_basis(p.vertices, p.dim);
  p.extended = p.image.size() < p.dim;
  if (!p.extended && p.dim <= 4) p.polytope = PolytopeNorm::from_vertices(p.vertices);
  return p;
}

Rational random_rational(std::mt19937_64& rng, int max_abs, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

TensorElement random_tensor(const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
  TensorElement u = TensorElement::zero(dims);
  for (auto& c : u.coeffs) c = random_rational(rng);
  return u;
}

PolyLinearMap random_map(const std::vector<std::size_t>& inputs, const std::vector<std::size_t>& outputs,
                         std::mt19937_64& rng) {
  PolyLinearMap f = PolyLinearMap::zero(inputs, outputs);
  for (auto& c : f.coeffs) c = random_rational(rng);
  return f;
}

PolyLinearMap normalize_contractive(const PolyLinearMap& f, const std::vector<PolytopeNorm>& inputs,
                                    const std::vector<PolytopeNorm>& outputs) {
  check_map_dims(f, dims_of(inputs), dims_of(outputs));
  auto vs = vertex_lists(inputs);
  auto fs = dual_lists(outputs);
  Rational best = 0;
  sweep(vs, [&](const std::vector<std::size_t>& in) {
    auto states = pick(vs, in);
    sweep(fs, [&](const std::vector<std::size_t>& out) {
      Rational v = abs(f.evaluate(states, pick(fs, out)));
      if (v > best) best = v;
      return true;
    });
    return true;
  });
  if (best == 0) return f;
  return f * (1 / best);
}

FactorizationReport factorization_check(FactorizationKind kind, const PolytopeNorm& a, const PolytopeNorm& b,
                                        const PolytopeNorm& c, std::size_t samples, std::uint64_t seed) {
  FactorizationReport r;
  r.kind = kind;
  std::mt19937_64 rng(seed);
  const std::size_t da = a.dim(), db = b.dim(), dc = c.dim();
  auto u = universal_map_tensors({da, db});
  for (std::size_t s = 0; s < samples; ++s) {
    const std::string tag = "sample " + std::to_string(s);
    if (kind == FactorizationKind::PushAlongM) {
      PolyLinearMap g = normalize_contractive(random_map({da, db}, {dc}, rng), {a, b}, {c});
      PolyLinearMap factored{{da * db}, {dc}, g.coeffs};
      if (compose(u.m, 0, factored, 0) != g) r.failures.push_back(tag + ": g/m after m differs from g");
      PushedNorm p = pushforward_norm(u.m, 0, {a, b}, {});
      if (!is_contractive(factored, {&p.vertices}, {&c.dual_vertices()}).holds)
        r.failures.push_back(tag + ": g/m is not contractive for the pushforward norm");
    } else if (kind == FactorizationKind::PullAlongW) {
      PolyLinearMap f = normalize_contractive(random_map({dc}, {da, db}, rng), {c}, {a, b});
      PolyLinearMap factored{{dc}, {da * db}, f.coeffs};
      if (compose(factored, 0, u.w, 0) != f) r.failures.push_back(tag + ": w after w\\f differs from f");
      PulledNorm p = pullback_norm(u.w, 0, {}, {a, b});
      if (!is_contractive(factored, {&c.vertices()}, {&p.covectors}).holds)
        r.failures.push_back(tag + ": w\\f is not contractive for the pullback norm");
    } else {
      PolyLinearMap f = normalize_contractive(random_map({dc}, {da}, rng), {c}, {a});
      PolyLinearMap id = PolyLinearMap::identity(da);
      if (compose(f, 0, id, 0) != f) r.failures.push_back(tag + ": id after f differs from f");
      PulledNorm p = pullback_norm(id, 0, {}, {a});
      if (!is_contractive(f, {&c.vertices()}, {&p.covectors}).holds)
        r.failures.push_back(tag + ": f is not contractive for the pullback along the identity");
    }
    ++r.checked;
  }
  return r;
}

}  // namespace polycat
