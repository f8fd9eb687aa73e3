#include "polycat/universal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polycat/error.hpp"

namespace polycat {
namespace {

ObjectList cat(std::initializer_list<const ObjectList*> parts) {
  ObjectList out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

ObjectList sub(const ObjectList& xs, std::size_t from, std::size_t to) {
  return ObjectList(xs.begin() + static_cast<std::ptrdiff_t>(from), xs.begin() + static_cast<std::ptrdiff_t>(to));
}

bool matches_at(const ObjectList& xs, std::size_t at, const ObjectList& pattern) {
  if (at + pattern.size() > xs.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), xs.begin() + static_cast<std::ptrdiff_t>(at));
}

ObjectList sorted_objects(const FinPolycategory& p) {
  ObjectList obs = p.objects();
  std::sort(obs.begin(), obs.end());
  return obs;
}

std::string hole(const ObjectList& left, const ObjectList& right) {
  ObjectList xs = left;
  xs.emplace_back("_");
  xs.insert(xs.end(), right.begin(), right.end());
  return to_string(xs);
}

UniversalityCertificate start_certificate(const Scope& s, std::size_t f, Position pos) {
  UniversalityCertificate c;
  c.polymap = s.at(f);
  c.position = pos;
  c.bound = s.bound();
  c.bound_relative = s.polycat().is_germ();
  return c;
}

}  // namespace

std::string to_string(const Position& p) {
  return std::string(p.side == Side::In ? "in:" : "out:") + std::to_string(p.index);
}

Position parse_position(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorCode::SyntaxError, "position '" + text + "' must be in:N or out:N");
  std::string side = text.substr(0, colon);
  Position p;
  if (side == "in") p.side = Side::In;
  else if (side == "out") p.side = Side::Out;
  else fail(ErrorCode::SyntaxError, "position side must be 'in' or 'out', got '" + side + "'");
  try {
    std::size_t used = 0;
    p.index = std::stoul(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorCode::SyntaxError, "position index in '" + text + "' is not a number");
  }
  return p;
}

std::vector<std::string> UniversalityCertificate::lines() const {
  std::vector<std::string> out;
  out.push_back("polymap: " + to_string(polymap) + " at " + to_string(position));
  out.push_back("checked instances: " + std::to_string(checked_instances));
  out.push_back("skipped (factor beyond bound): " + std::to_string(skipped_out_of_bound));
  if (failure) {
    out.push_back("failure: h = " + to_string(failure->h) + " split at " + std::to_string(failure->split) + " has " +
                  std::to_string(failure->factorizations) + " factorizations");
  }
  if (bound_relative) out.push_back("note: relative to arity bound " + std::to_string(bound));
  return out;
}

UniversalityCertificate is_out_universal(const Scope& s, std::size_t u, std::size_t i) {
  const PolyMap& um = s.at(u);
  if (i >= um.cod().size()) fail(ErrorCode::IndexOutOfRange, "output " + std::to_string(i) + " of " + to_string(um));
  auto c = start_certificate(s, u, Position{Side::Out, i});
  const ObjectList& gamma = um.dom();
  const ObjectList d1 = sub(um.cod(), 0, i);
  const ObjectList d2 = sub(um.cod(), i + 1, um.cod().size());
  const ObjectList a{um.cod()[i]};
  for (std::size_t h = 0; h < s.size(); ++h) {
    const PolyMap& hm = s.at(h);
    const auto& hc = hm.cod();
    if (hc.size() < d1.size() + d2.size()) continue;
    if (!matches_at(hc, 0, d1) || !matches_at(hc, hc.size() - d2.size(), d2)) continue;
    const ObjectList delta = sub(hc, d1.size(), hc.size() - d2.size());
    const auto& hd = hm.dom();
    if (hd.size() < gamma.size()) continue;
    for (std::size_t p = 0; p + gamma.size() <= hd.size(); ++p) {
      if (!matches_at(hd, p, gamma)) continue;
      const ObjectList g1 = sub(hd, 0, p);
      const ObjectList g2 = sub(hd, p + gamma.size(), hd.size());
      if (!g1.empty() && !d1.empty()) continue;
      if (!g2.empty() && !d2.empty()) continue;
      Boundary kb{cat({&g1, &a, &g2}), delta};
      if (!s.in_bound(kb)) {
        ++c.skipped_out_of_bound;
        c.bound_relative = true;
        continue;
      }
      std::size_t count = 0;
      for (auto k : s.hom(kb))
        if (s.compose(u, i, k, g1.size()) == h) ++count;
      ++c.checked_instances;
      if (count != 1) {
        c.failure = FactorizationFailure{hm, p, count};
        return c;
      }
    }
  }
  return c;
}

UniversalityCertificate is_in_universal(const Scope& s, std::size_t n, std::size_t j) {
  const PolyMap& nm = s.at(n);
  if (j >= nm.dom().size()) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(j) + " of " + to_string(nm));
  auto c = start_certificate(s, n, Position{Side::In, j});
  const ObjectList& delta = nm.cod();
  const ObjectList g1 = sub(nm.dom(), 0, j);
  const ObjectList g2 = sub(nm.dom(), j + 1, nm.dom().size());
  const ObjectList a{nm.dom()[j]};
  for (std::size_t h = 0; h < s.size(); ++h) {
    const PolyMap& hm = s.at(h);
    const auto& hd = hm.dom();
    if (hd.size() < g1.size() + g2.size()) continue;
    if (!matches_at(hd, 0, g1) || !matches_at(hd, hd.size() - g2.size(), g2)) continue;
    const ObjectList gamma = sub(hd, g1.size(), hd.size() - g2.size());
    const auto& hc = hm.cod();
    if (hc.size() < delta.size()) continue;
    for (std::size_t q = 0; q + delta.size() <= hc.size(); ++q) {
      if (!matches_at(hc, q, delta)) continue;
      const ObjectList d1 = sub(hc, 0, q);
      const ObjectList d2 = sub(hc, q + delta.size(), hc.size());
      if (!g1.empty() && !d1.empty()) continue;
      if (!g2.empty() && !d2.empty()) continue;
      Boundary kb{gamma, cat({&d1, &a, &d2})};
      if (!s.in_bound(kb)) {
        ++c.skipped_out_of_bound;
        c.bound_relative = true;
        continue;
      }
      std::size_t count = 0;
      for (auto k : s.hom(kb))
        if (s.compose(k, d1.size(), n, j) == h) ++count;
      ++c.checked_instances;
      if (count != 1) {
        c.failure = FactorizationFailure{hm, q, count};
        return c;
      }
    }
  }
  return c;
}

UniversalityCertificate is_universal(const Scope& s, std::size_t f, const Position& pos) {
  return pos.side == Side::Out ? is_out_universal(s, f, pos.index) : is_in_universal(s, f, pos.index);
}

UniversalityCertificate is_out_universal(const FinPolycategory& p, const PolyMap& u, std::size_t i) {
  Scope s(p);
  return is_out_universal(s, s.index(u), i);
}

UniversalityCertificate is_in_universal(const FinPolycategory& p, const PolyMap& n, std::size_t j) {
  Scope s(p);
  return is_in_universal(s, s.index(n), j);
}

std::string to_string(UniversalKind k) {
  switch (k) {
    case UniversalKind::Tensor: return "tensor";
    case UniversalKind::Par: return "par";
    case UniversalKind::LeftDual: return "left dual";
    case UniversalKind::RightDual: return "right dual";
    case UniversalKind::InUniversal: return "in-universal";
    case UniversalKind::OutUniversal: return "out-universal";
  }
  return "?";
}

std::optional<UniversalObjectResult> find_out_universal(const Scope& s, const ObjectList& gamma,
                                                        const ObjectList& delta1, const ObjectList& delta2) {
  for (const auto& a : sorted_objects(s.polycat())) {
    const ObjectList mid{a};
    Boundary b{gamma, cat({&delta1, &mid, &delta2})};
    if (!s.in_bound(b)) continue;
    for (auto u : s.hom(b))
      if (is_out_universal(s, u, delta1.size()).universal())
        return UniversalObjectResult{a, s.at(u), UniversalKind::OutUniversal, std::nullopt};
  }
  return std::nullopt;
}

std::optional<UniversalObjectResult> find_in_universal(const Scope& s, const ObjectList& gamma1,
                                                       const ObjectList& gamma2, const ObjectList& delta) {
  for (const auto& a : sorted_objects(s.polycat())) {
    const ObjectList mid{a};
    Boundary b{cat({&gamma1, &mid, &gamma2}), delta};
    if (!s.in_bound(b)) continue;
    for (auto n : s.hom(b))
      if (is_in_universal(s, n, gamma1.size()).universal())
        return UniversalObjectResult{a, s.at(n), UniversalKind::InUniversal, std::nullopt};
  }
  return std::nullopt;
}

std::optional<UniversalObjectResult> find_tensor(const Scope& s, const ObjectList& gamma) {
  auto r = find_out_universal(s, gamma, {}, {});
  if (r) r->kind = UniversalKind::Tensor;
  return r;
}

std::optional<UniversalObjectResult> find_par(const Scope& s, const ObjectList& delta) {
  auto r = find_in_universal(s, {}, {}, delta);
  if (r) r->kind = UniversalKind::Par;
  return r;
}

namespace {

// Cup/cap pairs satisfying both snake identities, first in canonical order.
std::optional<std::pair<std::size_t, std::size_t>> snake_pair(const Scope& s, const ObjectId& a, const ObjectId& d,
                                                              bool right) {
  if (s.bound() < 2) return std::nullopt;
  Boundary cup_b = right ? Boundary{{}, {a, d}} : Boundary{{}, {d, a}};
  Boundary cap_b = right ? Boundary{{d, a}, {}} : Boundary{{a, d}, {}};
  const std::size_t ida = s.identity(a), idd = s.identity(d);
  for (auto cup : s.hom(cup_b))
    for (auto cap : s.hom(cap_b)) {
      bool ok = right ? (s.compose(cup, 1, cap, 0) == ida && s.compose(cup, 0, cap, 1) == idd)
                      : (s.compose(cup, 0, cap, 1) == ida && s.compose(cup, 1, cap, 0) == idd);
      if (ok) return std::make_pair(cup, cap);
    }
  return std::nullopt;
}

std::optional<UniversalObjectResult> find_dual(const Scope& s, const ObjectId& a, bool right) {
  if (!s.polycat().has_object(a)) fail(ErrorCode::UnknownObject, "no object '" + a.name + "'");
  for (const auto& d : sorted_objects(s.polycat())) {
    auto pr = snake_pair(s, a, d, right);
    if (!pr) continue;
    UniversalObjectResult r{d, s.at(pr->first), right ? UniversalKind::RightDual : UniversalKind::LeftDual,
                            s.at(pr->second)};
    r.cross_validated = is_out_universal(s, pr->first, right ? 1 : 0).universal();
    return r;
  }
  return std::nullopt;
}

bool any_universal(const Scope& s, const Boundary& b, Position pos) {
  if (!s.in_bound(b)) return false;
  for (auto f : s.hom(b))
    if (is_universal(s, f, pos).universal()) return true;
  return false;
}

}  // namespace

std::optional<UniversalObjectResult> find_right_dual(const Scope& s, const ObjectId& a) { return find_dual(s, a, true); }
std::optional<UniversalObjectResult> find_left_dual(const Scope& s, const ObjectId& a) { return find_dual(s, a, false); }

bool DualConditions::agree() const {
  return std::all_of(holds.begin(), holds.end(), [&](bool b) { return b == holds[0]; });
}

DualConditions dual_conditions(const Scope& s, const ObjectId& a, const ObjectId& d, bool right) {
  DualConditions c{a, d, right, {}};
  Boundary cup_b = right ? Boundary{{}, {a, d}} : Boundary{{}, {d, a}};
  Boundary cap_b = right ? Boundary{{d, a}, {}} : Boundary{{a, d}, {}};
  const std::size_t dual_out = right ? 1 : 0, obj_out = right ? 0 : 1;
  const std::size_t dual_in = right ? 0 : 1, obj_in = right ? 1 : 0;
  c.holds[0] = any_universal(s, cup_b, Position{Side::Out, dual_out});
  c.holds[1] = any_universal(s, cap_b, Position{Side::In, dual_in});
  c.holds[2] = any_universal(s, cup_b, Position{Side::Out, obj_out});
  c.holds[3] = any_universal(s, cap_b, Position{Side::In, obj_in});
  c.holds[4] = snake_pair(s, a, d, right).has_value();
  return c;
}

BirepDecision decide_birepresentable(const FinPolycategory& p) {
  BirepDecision d;
  Scope s(p);
  d.bound = s.bound();
  d.bound_relative = p.is_germ();
  const ObjectList obs = sorted_objects(p);
  const std::size_t B = s.bound();
  const auto lists = lists_up_to(obs, B);

  // (a) in- and out-universal objects for every context.
  std::size_t contexts = 0;
  bool ok = true;
  for (const auto& gamma : lists) {
    for (const auto& d1 : lists) {
      for (const auto& d2 : lists) {
        if (d1.size() + d2.size() + 1 > B) continue;
        ++contexts;
        if (!find_out_universal(s, gamma, d1, d2)) {
          d.evidence.push_back("(a) no out-universal object for context " + to_string(gamma) + " -> " + hole(d1, d2));
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  if (ok) {
    for (const auto& delta : lists) {
      for (const auto& g1 : lists) {
        for (const auto& g2 : lists) {
          if (g1.size() + g2.size() + 1 > B) continue;
          ++contexts;
          if (!find_in_universal(s, g1, g2, delta)) {
            d.evidence.push_back("(a) no in-universal object for context " + hole(g1, g2) + " -> " + to_string(delta));
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  }
  d.by_universal_objects = ok;
  if (ok) d.evidence.push_back("(a) all " + std::to_string(contexts) + " contexts have universal objects");

  // (b) tensors, pars and duals.
  ok = true;
  std::vector<std::string> witnesses;
  for (const auto& gamma : lists) {
    auto t = find_tensor(s, gamma);
    if (!t) {
      d.evidence.push_back("(b) no tensor of (" + to_string(gamma) + ")");
      ok = false;
      break;
    }
    witnesses.push_back("(b) tensor(" + to_string(gamma) + ") = " + t->object.name + " via " + to_string(t->witness));
  }
  if (ok)
    for (const auto& delta : lists) {
      auto t = find_par(s, delta);
      if (!t) {
        d.evidence.push_back("(b) no par of (" + to_string(delta) + ")");
        ok = false;
        break;
      }
      witnesses.push_back("(b) par(" + to_string(delta) + ") = " + t->object.name + " via " + to_string(t->witness));
    }
  if (ok)
    for (const auto& a : obs) {
      auto r = find_right_dual(s, a);
      auto l = find_left_dual(s, a);
      if (!r || !l) {
        d.evidence.push_back("(b) no " + std::string(!r ? "right" : "left") + " dual of " + a.name);
        ok = false;
        break;
      }
      witnesses.push_back("(b) right dual of " + a.name + " = " + r->object.name + " via " + to_string(r->witness) +
                          " and " + to_string(*r->partner));
      witnesses.push_back("(b) left dual of " + a.name + " = " + l->object.name + " via " + to_string(l->witness) +
                          " and " + to_string(*l->partner));
    }
  d.by_connectives = ok;
  if (ok) d.evidence.insert(d.evidence.end(), witnesses.begin(), witnesses.end());
  return d;
}

CompositionCheckReport universal_composition_check(const FinPolycategory& p) {
  CompositionCheckReport r;
  Scope s(p);
  std::map<std::pair<std::size_t, Position>, bool> cache;
  auto univ = [&](std::size_t f, Position pos) {
    auto key = std::make_pair(f, pos);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    bool u = is_universal(s, f, pos).universal();
    cache.emplace(key, u);
    return u;
  };
  for (std::size_t f = 0; f < s.size(); ++f) {
    const auto& fm = s.at(f);
    for (std::size_t i = 0; i < fm.cod().size(); ++i)
      for (std::size_t g = 0; g < s.size(); ++g) {
        const auto& gm = s.at(g);
        for (std::size_t j = 0; j < gm.dom().size(); ++j) {
          auto c = s.compose(f, i, g, j);
          if (!c) continue;
          if (univ(g, Position{Side::In, j}))
            for (std::size_t a = 0; a < fm.dom().size(); ++a) {
              if (!univ(f, Position{Side::In, a})) continue;
              ++r.checked;
              if (!univ(*c, Position{Side::In, j + a}))
                r.failures.push_back("in: " + to_string(fm) + " at in:" + std::to_string(a) + " then " + to_string(gm) +
                                     " at in:" + std::to_string(j) + " gives " + to_string(s.at(*c)));
            }
          if (univ(f, Position{Side::Out, i}))
            for (std::size_t k = 0; k < gm.cod().size(); ++k) {
              if (!univ(g, Position{Side::Out, k})) continue;
              ++r.checked;
              if (!univ(*c, Position{Side::Out, i + k}))
                r.failures.push_back("out: " + to_string(fm) + " at out:" + std::to_string(i) + " then " + to_string(gm) +
                                     " at out:" + std::to_string(k) + " gives " + to_string(s.at(*c)));
            }
        }
      }
  }
  std::sort(r.failures.begin(), r.failures.end());
  return r;
}

}  // namespace polycat
