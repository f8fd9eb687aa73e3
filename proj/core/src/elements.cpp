#include "polycat/elements.hpp"

#include <algorithm>
#include <set>

#include "polycat/error.hpp"
#include "polycat/scope.hpp"

namespace polycat {
namespace {

ObjectId pair_object(const ObjectId& a, const ObjectId& r) { return ObjectId("(" + a.name + "," + r.name + ")"); }

std::string pair_id(const PolyMap& f, const std::string& x) { return "(" + f.id + "," + x + ")"; }

// A base polymap and an element of its distributor as a polymap of the total polycategory.
PolyMap total_map(const PolyMap& f, const FinDistributor& d, std::size_t x) {
  const auto& el = d.element(x);
  PolyMap m{pair_id(f, el.name), {}};
  for (std::size_t k = 0; k < el.ins.size(); ++k)
    m.boundary.domain.push_back(pair_object(f.dom()[k], d.inputs()[k]->objects()[el.ins[k]]));
  for (std::size_t k = 0; k < el.outs.size(); ++k)
    m.boundary.codomain.push_back(pair_object(f.cod()[k], d.outputs()[k]->objects()[el.outs[k]]));
  return m;
}

}  // namespace

ElementsConstruction build_elements(const LaxNormalFunctor& f) {
  auto lax = check_lax_normal(f);
  if (!lax.passed())
    fail(ErrorCode::InvariantError, f.name + " is not lax normal: " + (lax.failures.empty() ? "" : lax.failures.front()));
  ElementsConstruction out;
  Scope s(*f.base);

  ObjectList objects;
  std::map<ObjectId, ObjectId> object_base;
  for (const auto& a : f.base->objects())
    for (const auto& r : f.fibre(a).objects()) {
      objects.push_back(pair_object(a, r));
      object_base[objects.back()] = a;
    }
  if (std::set<ObjectId>(objects.begin(), objects.end()).size() != objects.size())
    fail(ErrorCode::InvariantError, f.name + ": object names of the total polycategory collide");

  std::map<Boundary, std::vector<PolyMap>> homs;
  for (const auto& m : s.maps()) {
    const auto& d = f.dist(m);
    for (std::size_t x = 0; x < d.size(); ++x) {
      PolyMap t = total_map(m, d, x);
      homs[t.boundary].push_back(t);
      out.origin[t] = {m, x};
    }
  }
  std::map<ObjectId, PolyMap> identities;
  for (const auto& a : f.base->objects()) {
    const PolyMap id = s.at(s.identity(a));
    const auto& d = f.dist(id);
    const auto& c = f.fibre(a);
    const auto& norm = f.normality.at(a);
    for (std::size_t x = 0; x < d.size(); ++x)
      if (c.is_identity(norm[x])) identities[pair_object(a, c.objects()[d.element(x).ins[0]])] = total_map(id, d, x);
  }

  auto total = TablePolycategory::tabulate(
      "el(" + f.name + ")", objects, f.base->arity_bound(),
      [&](const Boundary& b) {
        auto it = homs.find(b);
        return it == homs.end() ? std::vector<PolyMap>{} : it->second;
      },
      [&](const ObjectId& a) {
        auto it = identities.find(a);
        if (it == identities.end()) fail(ErrorCode::InvariantError, "no identity at " + a.name);
        return it->second;
      },
      [&](const CompositionRequest& r) {
        const auto& [fb, x] = out.origin.at(r.f);
        const auto& [gb, y] = out.origin.at(r.g);
        auto c = s.compose(s.index(fb), r.i, s.index(gb), r.j);
        if (!c) fail(ErrorCode::OutOfBound, "base composite of " + to_string(fb) + " and " + to_string(gb) + " leaves the bound");
        const PolyMap& cb = s.at(*c);
        return total_map(cb, f.dist(cb), f.mu_at({fb, r.i, gb, r.j}, x, y));
      });
  out.total = std::make_shared<TablePolycategory>(std::move(total));

  std::map<PolyMap, PolyMap> maps;
  for (const auto& [t, o] : out.origin) maps[t] = o.first;
  out.projection = std::make_shared<PolyFunctor>(
      PolyFunctor::from_tables("pr(" + f.name + ")", out.total, f.base, object_base, std::move(maps)));
  out.axioms = check_axioms(*out.total);
  if (!out.axioms.passed())
    fail(ErrorCode::InvariantError, out.total->name() + " fails its axiom check: " + out.axioms.counterexamples.front().witness);
  out.functor = check_functor(*out.projection);
  if (!out.functor.passed())
    fail(ErrorCode::InvariantError, out.projection->name() + " fails its functor check: " + out.functor.failures.front());
  return out;
}

ElementCheckReport roundtrip_check(const LaxNormalFunctor& f) {
  ElementCheckReport r;
  r.subject = f.name;
  const auto el = build_elements(f);
  const auto g = fibres_functor(*el.projection);
  Scope s(*f.base);

  // Fibres: objects R -> (A,R), morphisms through the normality isos.
  std::map<ObjectId, std::vector<std::size_t>> obj_map, mor_map;
  for (const auto& a : f.base->objects()) {
    const auto& c = f.fibre(a);
    const auto& cg = g.fibre(a);
    const PolyMap id = s.at(s.identity(a));
    const auto& d = f.dist(id);
    const auto& norm = f.normality.at(a);
    auto& om = obj_map[a];
    auto& mm = mor_map[a];
    ++r.checked["fibre"];
    if (c.object_count() != cg.object_count() || c.morphisms().size() != cg.morphisms().size()) {
      r.fail("fibre over " + a.name + ": sizes differ");
      continue;
    }
    for (const auto& o : c.objects()) om.push_back(cg.object_index(pair_object(a, o)));
    mm.assign(c.morphisms().size(), 0);
    for (std::size_t x = 0; x < d.size(); ++x) mm[norm[x]] = cg.morphism_index(to_string(total_map(id, d, x)));
    if (std::set<std::size_t>(mm.begin(), mm.end()).size() != mm.size())
      r.fail("fibre over " + a.name + ": morphism map is not injective");
    for (std::size_t k = 0; k < c.morphisms().size(); ++k) {
      const auto& m = c.morphism(k);
      const auto& n = cg.morphism(mm[k]);
      if (om[m.source] != n.source || om[m.target] != n.target) r.fail("fibre over " + a.name + ": " + m.id + " changes ends");
    }
    for (std::size_t o = 0; o < c.object_count(); ++o)
      if (mm[c.identity(o)] != cg.identity(om[o])) r.fail("fibre over " + a.name + ": identity not preserved");
    for (const auto& [gf, h] : c.table())
      if (mm[h] != cg.compose(mm[gf.first], mm[gf.second]))
        r.fail("fibre over " + a.name + ": composition not preserved at " + c.morphism(gf.first).id + "." + c.morphism(gf.second).id);
  }
  if (!r.passed()) return r;

  // Distributors elementwise.
  std::map<PolyMap, std::vector<std::size_t>> elem_map;
  for (const auto& m : s.maps()) {
    const auto& d = f.dist(m);
    const auto& dg = g.dist(m);
    auto& em = elem_map[m];
    ++r.checked["distributor"];
    if (d.size() != dg.size()) {
      r.fail("distributor over " + to_string(m) + ": sizes differ");
      continue;
    }
    bool ok = true;
    for (std::size_t x = 0; x < d.size() && ok; ++x) {
      const auto& e = d.element(x);
      std::vector<std::size_t> outs, ins;
      for (std::size_t k = 0; k < e.outs.size(); ++k) outs.push_back(obj_map.at(m.cod()[k])[e.outs[k]]);
      for (std::size_t k = 0; k < e.ins.size(); ++k) ins.push_back(obj_map.at(m.dom()[k])[e.ins[k]]);
      auto y = dg.find(outs, ins, total_map(m, d, x).id);
      if (!y) {
        r.fail("distributor over " + to_string(m) + ": no image for " + e.name);
        ok = false;
      } else {
        em.push_back(*y);
      }
    }
    if (!ok) continue;
    if (std::set<std::size_t>(em.begin(), em.end()).size() != em.size())
      r.fail("distributor over " + to_string(m) + ": element map is not injective");
    for (int side = 0; side < 2; ++side) {
      const auto& objs = side == 0 ? m.dom() : m.cod();
      for (std::size_t v = 0; v < objs.size(); ++v) {
        Position var{side == 0 ? Side::In : Side::Out, v};
        const auto& c = f.fibre(objs[v]);
        const auto& mm = mor_map.at(objs[v]);
        for (std::size_t mo = 0; mo < c.morphisms().size(); ++mo)
          for (std::size_t x = 0; x < d.size(); ++x) {
            if (!d.applies(var, mo, x)) continue;
            ++r.checked["action"];
            if (em[d.act(var, mo, x)] != dg.act(var, mm[mo], em[x]))
              r.fail("distributor over " + to_string(m) + ": action of " + c.morphism(mo).id + " at " + to_string(var) +
                     " not preserved on " + d.element(x).name);
          }
      }
    }
  }
  if (!r.passed()) return r;

  for (const auto& a : f.base->objects()) {
    const PolyMap id = s.at(s.identity(a));
    const auto& em = elem_map.at(id);
    const auto& nf = f.normality.at(a);
    const auto& ng = g.normality.at(a);
    for (std::size_t x = 0; x < nf.size(); ++x) {
      ++r.checked["normality"];
      if (ng[em[x]] != mor_map.at(a)[nf[x]]) r.fail("normality at " + a.name + " not preserved on " + f.dist(id).element(x).name);
    }
  }
  if (f.mu.size() != g.mu.size()) r.fail("laxity components: key sets differ");
  for (const auto& [key, table] : f.mu) {
    auto it = g.mu.find(key);
    if (it == g.mu.end()) {
      r.fail("laxity component missing for " + to_string(key));
      continue;
    }
    const auto& ef = elem_map.at(key.f);
    const auto& eg = elem_map.at(key.g);
    auto c = s.compose(s.index(key.f), key.i, s.index(key.g), key.j);
    const auto& ec = elem_map.at(s.at(*c));
    for (const auto& [xy, z] : table) {
      ++r.checked["mu"];
      auto jt = it->second.find({ef[xy.first], eg[xy.second]});
      if (jt == it->second.end() || jt->second != ec[z]) r.fail("mu not preserved for " + to_string(key));
    }
  }
  return r;
}

ElementCheckReport roundtrip_check(const PolyFunctor& p) {
  ElementCheckReport r;
  r.subject = p.name();
  const auto g = fibres_functor(p);
  const auto el = build_elements(g);
  const auto& total = *el.total;
  Scope src(p.source());

  std::map<ObjectId, ObjectId> objects;
  std::set<ObjectId> object_images;
  for (const auto& o : p.source().objects()) {
    ++r.checked["object"];
    ObjectId t = pair_object(p(o), o);
    if (!total.has_object(t)) r.fail("object " + o.name + " has no image");
    objects[o] = t;
    object_images.insert(t);
  }
  if (object_images.size() != total.objects().size()) r.fail("object map is not bijective");
  if (!r.passed()) return r;

  std::map<PolyMap, PolyMap> maps;
  std::set<PolyMap> images;
  for (const auto& m : src.maps()) {
    ++r.checked["polymap"];
    PolyMap t{pair_id(p(m), m.id), {}};
    for (const auto& o : m.dom()) t.boundary.domain.push_back(objects.at(o));
    for (const auto& o : m.cod()) t.boundary.codomain.push_back(objects.at(o));
    if (!total.contains(t)) {
      r.fail("polymap " + to_string(m) + " has no image");
      continue;
    }
    maps[m] = t;
    images.insert(t);
    if (el.projection->operator()(t) != p(m)) r.fail("projection does not recover p on " + to_string(m));
  }
  std::size_t in_source_bound = 0;
  const std::size_t b = p.source().arity_bound();
  for (const auto& t : total.polymaps()) in_source_bound += t.dom().size() <= b && t.cod().size() <= b;
  if (images.size() != maps.size() || images.size() != in_source_bound) r.fail("polymap map is not bijective");
  if (!r.passed()) return r;

  auto iso = PolyFunctor::from_tables("iso(" + p.name() + ")", p.source_ptr(), el.total, objects, maps);
  auto rep = check_functor(iso);
  r.checked["functor"] = rep.checked_composites;
  for (const auto& f : rep.failures) r.fail("comparison functor: " + f);
  return r;
}

bool MvarReport::representable_everywhere() const {
  return std::all_of(entries.begin(), entries.end(), [](const MvarEntry& e) { return e.representable; });
}

std::vector<std::string> MvarReport::lines() const {
  std::vector<std::string> out;
  std::size_t good = 0;
  for (const auto& e : entries) good += e.representable;
  out.push_back("variables: " + std::to_string(entries.size()) + ", representable " + std::to_string(good));
  for (const auto& e : entries)
    if (!e.representable)
      out.push_back("not representable: " + to_string(e.polymap) + " " + to_string(e.variable) + " at " + e.unrepresented);
  out.push_back("laxity components: " + std::to_string(composites_checked) + ", not invertible " +
                std::to_string(pseudo_failures.size()));
  for (const auto& p : pseudo_failures) out.push_back("not invertible: " + p);
  return out;
}

MvarReport mvar_check(const LaxNormalFunctor& f) {
  MvarReport r;
  r.functor = f.name;
  Scope s(*f.base);
  for (const auto& m : s.maps()) {
    const auto& d = f.dist(m);
    for (int side = 0; side < 2; ++side) {
      const std::size_t n = side == 0 ? m.dom().size() : m.cod().size();
      for (std::size_t v = 0; v < n; ++v) {
        MvarEntry e{m, {side == 0 ? Side::In : Side::Out, v}, true, ""};
        if (auto w = representability_failure(d, e.variable)) {
          e.representable = false;
          e.unrepresented = *w;
        }
        r.entries.push_back(std::move(e));
      }
    }
  }
  for (const auto& [key, table] : f.mu) {
    ++r.composites_checked;
    const auto& p = f.dist(key.f);
    const auto& q = f.dist(key.g);
    auto c = s.compose(s.index(key.f), key.i, s.index(key.g), key.j);
    const auto& target = f.dist(s.at(*c));
    auto coend = compose_distributors(p, key.i, q, key.j);
    std::vector<std::size_t> image(coend.result->size(), target.size());
    bool ok = true;
    for (const auto& [xy, cls] : coend.class_of) {
      std::size_t z = table.at(xy);
      if (image[cls] == target.size()) image[cls] = z;
      else if (image[cls] != z) ok = false;
    }
    std::set<std::size_t> hit(image.begin(), image.end());
    if (!ok || hit.size() != image.size() || image.size() != target.size()) r.pseudo_failures.push_back(to_string(key));
  }
  return r;
}

bool GrothendieckReport::agree() const {
  if (mvar.holds() != bifib.holds()) return false;
  if (birep && birep->birepresentable() != mvar.holds()) return false;
  return missing_matches;
}

std::vector<std::string> GrothendieckReport::lines() const {
  std::vector<std::string> out;
  out.push_back(std::string("multivariable adjunctions everywhere: ") + (mvar.holds() ? "yes" : "no"));
  for (const auto& l : mvar.lines()) out.push_back("  " + l);
  out.push_back(std::string("bifibration: ") + (bifib.holds() ? "yes" : "no"));
  for (const auto* d : {&bifib.pull, &bifib.push})
    if (d->missing) out.push_back("  missing lift: " + to_string(d->missing->first) + " " + to_string(d->missing->second));
  if (birep) out.push_back(std::string("birepresentable: ") + (birep->birepresentable() ? "yes" : "no"));
  out.push_back(std::string("missing lift at a failing variable: ") + (missing_matches ? "yes" : "no"));
  out.push_back(std::string("agree: ") + (agree() ? "yes" : "no"));
  return out;
}

GrothendieckReport grothendieck_crosscheck(const LaxNormalFunctor& f) {
  GrothendieckReport r;
  r.mvar = mvar_check(f);
  const auto el = build_elements(f);
  r.bifib = decide_bifibration(*el.projection);
  if (is_terminal(*f.base)) r.birep = decide_birepresentable(*el.total);
  std::set<std::pair<PolyMap, Position>> failing;
  for (const auto& e : r.mvar.entries)
    if (!e.representable) failing.insert({e.polymap, e.variable});
  if (!failing.empty())
    for (const auto* d : {&r.bifib.pull, &r.bifib.push})
      if (d->missing && !failing.count(*d->missing)) r.missing_matches = false;
  return r;
}

bool is_terminal(const FinPolycategory& p) {
  if (p.objects().size() != 1) return false;
  for (const auto& b : p.boundaries_in_scope())
    if (p.hom(b).size() != 1) return false;
  return true;
}

}  // namespace polycat
