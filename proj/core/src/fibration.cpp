#include "polycat/fibration.hpp"

#include <algorithm>
#include <sstream>

#include "polycat/error.hpp"

namespace polycat {
namespace {

ObjectList sub(const ObjectList& xs, std::size_t from, std::size_t to) {
  return ObjectList(xs.begin() + static_cast<std::ptrdiff_t>(from), xs.begin() + static_cast<std::ptrdiff_t>(to));
}

bool matches_at(const ObjectList& xs, std::size_t at, const ObjectList& pattern) {
  if (at + pattern.size() > xs.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), xs.begin() + static_cast<std::ptrdiff_t>(at));
}

ObjectList join(const ObjectList& a, const ObjectId& x, const ObjectList& b) {
  ObjectList out = a;
  out.push_back(x);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<std::string> CartesianCertificate::lines() const {
  std::vector<std::string> out;
  out.push_back("polymap: " + to_string(polymap) + " at " + to_string(position) + " relative to " + functor);
  out.push_back("checked instances: " + std::to_string(checked_instances));
  out.push_back("skipped (lift beyond bound): " + std::to_string(skipped_out_of_bound));
  if (failure)
    out.push_back("failure: xi = " + to_string(failure->xi) + " split at " + std::to_string(failure->split) +
                  " over base factor " + to_string(failure->base_factor) + " has " + std::to_string(failure->lifts) +
                  " lifts");
  if (bound_relative) out.push_back("note: relative to arity bound " + std::to_string(bound));
  return out;
}

FibrationContext::FibrationContext(const PolyFunctor& p) : p_(&p), source_(p.source()), base_(p.target()) {
  image_.resize(source_.size());
  for (std::size_t e = 0; e < source_.size(); ++e) {
    auto b = base_.find(p(source_.at(e)));
    if (!b) fail(ErrorCode::OutOfBound, "image of " + to_string(source_.at(e)) + " lies outside the base scope");
    image_[e] = *b;
  }
  for (const auto& a : p.target().objects()) fibres_[a];
  for (const auto& x : p.source().objects()) fibres_[p(x)].push_back(x);
  for (auto& [a, xs] : fibres_) std::sort(xs.begin(), xs.end());
}

const ObjectList& FibrationContext::fibre(const ObjectId& a) const {
  static const ObjectList empty;
  auto it = fibres_.find(a);
  return it == fibres_.end() ? empty : it->second;
}

std::vector<ObjectList> FibrationContext::fibre_tuples(const ObjectList& base_list) const {
  std::vector<ObjectList> out{ObjectList{}};
  for (const auto& a : base_list) {
    const auto& fs = fibre(a);
    std::vector<ObjectList> next;
    for (const auto& prefix : out)
      for (const auto& x : fs) {
        ObjectList t = prefix;
        t.push_back(x);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

CartesianCertificate FibrationContext::compute_in(std::size_t psi, std::size_t j) const {
  const PolyMap& pm = source_.at(psi);
  if (j >= pm.dom().size()) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(j) + " of " + to_string(pm));
  CartesianCertificate c;
  c.polymap = pm;
  c.position = Position{Side::In, j};
  c.functor = p_->name();
  c.bound = source_.bound();
  c.bound_relative = p_->source().is_germ() || p_->target().is_germ();
  const std::size_t g = image_[psi];
  const ObjectList pi1 = sub(pm.dom(), 0, j);
  const ObjectList pi2 = sub(pm.dom(), j + 1, pm.dom().size());
  const ObjectId& r = pm.dom()[j];
  const ObjectId a = (*p_)(r);
  const ObjectList& sigma = pm.cod();
  for (std::size_t xi = 0; xi < source_.size(); ++xi) {
    const PolyMap& xm = source_.at(xi);
    const auto& xd = xm.dom();
    if (xd.size() < pi1.size() + pi2.size()) continue;
    if (!matches_at(xd, 0, pi1) || !matches_at(xd, xd.size() - pi2.size(), pi2)) continue;
    const ObjectList pi = sub(xd, pi1.size(), xd.size() - pi2.size());
    const auto& xc = xm.cod();
    for (std::size_t q = 0; q + sigma.size() <= xc.size(); ++q) {
      if (!matches_at(xc, q, sigma)) continue;
      const ObjectList s1 = sub(xc, 0, q);
      const ObjectList s2 = sub(xc, q + sigma.size(), xc.size());
      if (!pi1.empty() && !s1.empty()) continue;
      if (!pi2.empty() && !s2.empty()) continue;
      Boundary kb{pi, join(s1, r, s2)};
      if (!source_.in_bound(kb)) {
        ++c.skipped_out_of_bound;
        c.bound_relative = true;
        continue;
      }
      Boundary fb{(*p_)(pi), join((*p_)(s1), a, (*p_)(s2))};
      for (auto f : base_.hom(fb)) {
        if (base_.compose(f, s1.size(), g, j) != image_[xi]) continue;
        std::size_t lifts = 0;
        for (auto k : source_.hom(kb))
          if (image_[k] == f && source_.compose(k, s1.size(), psi, j) == xi) ++lifts;
        ++c.checked_instances;
        if (lifts != 1) {
          c.failure = CartesianFailure{xm, q, base_.at(f), lifts};
          return c;
        }
      }
    }
  }
  return c;
}

CartesianCertificate FibrationContext::compute_out(std::size_t phi, std::size_t i) const {
  const PolyMap& pm = source_.at(phi);
  if (i >= pm.cod().size()) fail(ErrorCode::IndexOutOfRange, "output " + std::to_string(i) + " of " + to_string(pm));
  CartesianCertificate c;
  c.polymap = pm;
  c.position = Position{Side::Out, i};
  c.functor = p_->name();
  c.bound = source_.bound();
  c.bound_relative = p_->source().is_germ() || p_->target().is_germ();
  const std::size_t g = image_[phi];
  const ObjectList s1 = sub(pm.cod(), 0, i);
  const ObjectList s2 = sub(pm.cod(), i + 1, pm.cod().size());
  const ObjectId& r = pm.cod()[i];
  const ObjectId a = (*p_)(r);
  const ObjectList& pi = pm.dom();
  for (std::size_t xi = 0; xi < source_.size(); ++xi) {
    const PolyMap& xm = source_.at(xi);
    const auto& xc = xm.cod();
    if (xc.size() < s1.size() + s2.size()) continue;
    if (!matches_at(xc, 0, s1) || !matches_at(xc, xc.size() - s2.size(), s2)) continue;
    const ObjectList sigma = sub(xc, s1.size(), xc.size() - s2.size());
    const auto& xd = xm.dom();
    for (std::size_t q = 0; q + pi.size() <= xd.size(); ++q) {
      if (!matches_at(xd, q, pi)) continue;
      const ObjectList p1 = sub(xd, 0, q);
      const ObjectList p2 = sub(xd, q + pi.size(), xd.size());
      if (!p1.empty() && !s1.empty()) continue;
      if (!p2.empty() && !s2.empty()) continue;
      Boundary kb{join(p1, r, p2), sigma};
      if (!source_.in_bound(kb)) {
        ++c.skipped_out_of_bound;
        c.bound_relative = true;
        continue;
      }
      Boundary fb{join((*p_)(p1), a, (*p_)(p2)), (*p_)(sigma)};
      for (auto f : base_.hom(fb)) {
        if (base_.compose(g, i, f, p1.size()) != image_[xi]) continue;
        std::size_t lifts = 0;
        for (auto k : source_.hom(kb))
          if (image_[k] == f && source_.compose(phi, i, k, p1.size()) == xi) ++lifts;
        ++c.checked_instances;
        if (lifts != 1) {
          c.failure = CartesianFailure{xm, q, base_.at(f), lifts};
          return c;
        }
      }
    }
  }
  return c;
}

const CartesianCertificate& FibrationContext::in_cartesian(std::size_t psi, std::size_t j) const {
  auto key = std::make_pair(psi, Position{Side::In, j});
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, compute_in(psi, j)).first;
  return it->second;
}

const CartesianCertificate& FibrationContext::out_cartesian(std::size_t phi, std::size_t i) const {
  auto key = std::make_pair(phi, Position{Side::Out, i});
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, compute_out(phi, i)).first;
  return it->second;
}

const CartesianCertificate& FibrationContext::cartesian(std::size_t f, const Position& pos) const {
  return pos.side == Side::In ? in_cartesian(f, pos.index) : out_cartesian(f, pos.index);
}

CartesianCertificate is_in_cartesian(const PolyFunctor& p, const PolyMap& psi, std::size_t j) {
  FibrationContext c(p);
  return c.in_cartesian(c.source().index(psi), j);
}

CartesianCertificate is_out_cartesian(const PolyFunctor& p, const PolyMap& phi, std::size_t i) {
  FibrationContext c(p);
  return c.out_cartesian(c.source().index(phi), i);
}

namespace {

void check_refines(const FibrationContext& c, const ObjectList& fibre_list, const ObjectList& base_list) {
  if (c.functor()(fibre_list) != base_list)
    fail(ErrorCode::BoundaryMismatch, "fibre list " + to_string(fibre_list) + " does not lie over " + to_string(base_list));
}

std::string tuple_text(const ObjectList& a, const ObjectList& b, const ObjectList& d) {
  return "(" + to_string(a) + " ; " + to_string(b) + " ; " + to_string(d) + ")";
}

}  // namespace

std::optional<Lift> pullback_exists(const FibrationContext& c, const PolyMap& f, std::size_t j, const ObjectList& pi1,
                                    const ObjectList& pi2, const ObjectList& sigma) {
  const std::size_t fi = c.base().index(f);
  if (j >= f.dom().size()) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(j) + " of " + to_string(f));
  check_refines(c, pi1, sub(f.dom(), 0, j));
  check_refines(c, pi2, sub(f.dom(), j + 1, f.dom().size()));
  check_refines(c, sigma, f.cod());
  for (const auto& r : c.fibre(f.dom()[j])) {
    Boundary b{join(pi1, r, pi2), sigma};
    if (!c.source().in_bound(b)) fail(ErrorCode::OutOfBound, "lift boundary " + to_string(b) + " exceeds the bound");
    for (auto psi : c.source().hom(b))
      if (c.image(psi) == fi && c.in_cartesian(psi, pi1.size()).cartesian()) return Lift{r, c.source().at(psi)};
  }
  return std::nullopt;
}

std::optional<Lift> pushforward_exists(const FibrationContext& c, const PolyMap& f, std::size_t i, const ObjectList& pi,
                                       const ObjectList& sigma1, const ObjectList& sigma2) {
  const std::size_t fi = c.base().index(f);
  if (i >= f.cod().size()) fail(ErrorCode::IndexOutOfRange, "output " + std::to_string(i) + " of " + to_string(f));
  check_refines(c, pi, f.dom());
  check_refines(c, sigma1, sub(f.cod(), 0, i));
  check_refines(c, sigma2, sub(f.cod(), i + 1, f.cod().size()));
  for (const auto& r : c.fibre(f.cod()[i])) {
    Boundary b{pi, join(sigma1, r, sigma2)};
    if (!c.source().in_bound(b)) fail(ErrorCode::OutOfBound, "lift boundary " + to_string(b) + " exceeds the bound");
    for (auto phi : c.source().hom(b))
      if (c.image(phi) == fi && c.out_cartesian(phi, sigma1.size()).cartesian()) return Lift{r, c.source().at(phi)};
  }
  return std::nullopt;
}

FibrationDecision decide_pull_fibration(const FibrationContext& c) {
  FibrationDecision d;
  d.bound = c.source().bound();
  const Scope& b = c.base();
  for (std::size_t f = 0; f < b.size(); ++f) {
    const PolyMap& fm = b.at(f);
    if (!c.source().in_bound(fm.boundary)) continue;
    for (std::size_t j = 0; j < fm.dom().size(); ++j) {
      auto t1 = c.fibre_tuples(sub(fm.dom(), 0, j));
      auto t2 = c.fibre_tuples(sub(fm.dom(), j + 1, fm.dom().size()));
      auto ts = c.fibre_tuples(fm.cod());
      for (const auto& pi1 : t1)
        for (const auto& pi2 : t2)
          for (const auto& sigma : ts) {
            ++d.checked;
            if (!pullback_exists(c, fm, j, pi1, pi2, sigma)) {
              d.evidence.push_back("no pullback of " + to_string(fm) + " at in:" + std::to_string(j) + " for " +
                                   tuple_text(pi1, pi2, sigma));
              d.missing = std::make_pair(fm, Position{Side::In, j});
              return d;
            }
          }
    }
  }
  d.holds = true;
  d.evidence.push_back("pullbacks exist for all " + std::to_string(d.checked) + " base polymap/position/fibre tuples");
  return d;
}

FibrationDecision decide_push_fibration(const FibrationContext& c) {
  FibrationDecision d;
  d.bound = c.source().bound();
  const Scope& b = c.base();
  for (std::size_t f = 0; f < b.size(); ++f) {
    const PolyMap& fm = b.at(f);
    if (!c.source().in_bound(fm.boundary)) continue;
    for (std::size_t i = 0; i < fm.cod().size(); ++i) {
      auto tp = c.fibre_tuples(fm.dom());
      auto t1 = c.fibre_tuples(sub(fm.cod(), 0, i));
      auto t2 = c.fibre_tuples(sub(fm.cod(), i + 1, fm.cod().size()));
      for (const auto& pi : tp)
        for (const auto& s1 : t1)
          for (const auto& s2 : t2) {
            ++d.checked;
            if (!pushforward_exists(c, fm, i, pi, s1, s2)) {
              d.evidence.push_back("no pushforward of " + to_string(fm) + " at out:" + std::to_string(i) + " for " +
                                   tuple_text(pi, s1, s2));
              d.missing = std::make_pair(fm, Position{Side::Out, i});
              return d;
            }
          }
    }
  }
  d.holds = true;
  d.evidence.push_back("pushforwards exist for all " + std::to_string(d.checked) + " base polymap/position/fibre tuples");
  return d;
}

BifibrationDecision decide_bifibration(const FibrationContext& c) {
  return BifibrationDecision{decide_pull_fibration(c), decide_push_fibration(c)};
}

BifibrationDecision decide_bifibration(const PolyFunctor& p) {
  FibrationContext c(p);
  return decide_bifibration(c);
}

BirepBifibReport birep_bifib_crosscheck(const PolycatPtr& p) {
  BirepBifibReport r;
  r.birep = decide_birepresentable(*p);
  PolyFunctor u = unique_functor_to_terminal(p);
  r.bifib = decide_bifibration(u);
  return r;
}

CompositionCheckReport cartesian_composition_check(const PolyFunctor& p) {
  CompositionCheckReport r;
  FibrationContext c(p);
  const Scope& s = c.source();
  auto cart = [&](std::size_t f, Position pos) { return c.cartesian(f, pos).cartesian(); };
  for (std::size_t f = 0; f < s.size(); ++f) {
    const auto& fm = s.at(f);
    for (std::size_t i = 0; i < fm.cod().size(); ++i)
      for (std::size_t g = 0; g < s.size(); ++g) {
        const auto& gm = s.at(g);
        for (std::size_t j = 0; j < gm.dom().size(); ++j) {
          auto comp = s.compose(f, i, g, j);
          if (!comp) continue;
          if (cart(g, Position{Side::In, j}))
            for (std::size_t a = 0; a < fm.dom().size(); ++a) {
              if (!cart(f, Position{Side::In, a})) continue;
              ++r.checked;
              if (!cart(*comp, Position{Side::In, j + a}))
                r.failures.push_back("in: " + to_string(fm) + " at in:" + std::to_string(a) + " then " + to_string(gm) +
                                     " at in:" + std::to_string(j) + " gives " + to_string(s.at(*comp)));
            }
          if (cart(f, Position{Side::Out, i}))
            for (std::size_t k = 0; k < gm.cod().size(); ++k) {
              if (!cart(g, Position{Side::Out, k})) continue;
              ++r.checked;
              if (!cart(*comp, Position{Side::Out, i + k}))
                r.failures.push_back("out: " + to_string(fm) + " at out:" + std::to_string(i) + " then " +
                                     to_string(gm) + " at out:" + std::to_string(k) + " gives " + to_string(s.at(*comp)));
            }
        }
      }
  }
  std::sort(r.failures.begin(), r.failures.end());
  return r;
}

CompositionCheckReport cartesian_over_cartesian_check(const PolyFunctor& p, const PolyFunctor& q) {
  return cartesian_over_cartesian_check(p, q, compose_functors(q, p));
}

CompositionCheckReport cartesian_over_cartesian_check(const PolyFunctor& p, const PolyFunctor& q,
                                                      const PolyFunctor& qp) {
  CompositionCheckReport r;
  FibrationContext cp(p), cq(q), cqp(qp);
  const Scope& s = cp.source();
  for (std::size_t f = 0; f < s.size(); ++f) {
    const auto& fm = s.at(f);
    if (qp(fm) != q(p(fm))) r.failures.push_back("composite sends " + to_string(fm) + " to " + to_string(qp(fm)) +
                                                 " instead of " + to_string(q(p(fm))));
    const std::size_t pf = cp.image(f);
    std::vector<Position> positions;
    for (std::size_t j = 0; j < fm.dom().size(); ++j) positions.push_back(Position{Side::In, j});
    for (std::size_t i = 0; i < fm.cod().size(); ++i) positions.push_back(Position{Side::Out, i});
    for (const auto& pos : positions) {
      if (!cp.cartesian(f, pos).cartesian()) continue;
      auto qi = cq.source().find(cp.base().at(pf));
      if (!qi || !cq.cartesian(*qi, pos).cartesian()) continue;
      ++r.checked;
      if (!cqp.cartesian(f, pos).cartesian())
        r.failures.push_back(to_string(fm) + " at " + to_string(pos) + " is not cartesian over the composite");
    }
  }
  std::sort(r.failures.begin(), r.failures.end());
  return r;
}

}  // namespace polycat
