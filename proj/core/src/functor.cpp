#include "polycat/functor.hpp"

#include <algorithm>
#include <sstream>

#include "polycat/error.hpp"
#include "polycat/scope.hpp"

namespace polycat {

PolyFunctor::PolyFunctor(std::string name, PolycatPtr source, PolycatPtr target, ObjectMap objects, MapMap maps)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
      objects_(std::move(objects)), maps_(std::move(maps)) {}

PolyFunctor PolyFunctor::from_tables(std::string name, PolycatPtr source, PolycatPtr target,
                                     std::map<ObjectId, ObjectId> objects, std::map<PolyMap, PolyMap> maps) {
  auto obs = std::make_shared<std::map<ObjectId, ObjectId>>(std::move(objects));
  auto ms = std::make_shared<std::map<PolyMap, PolyMap>>(std::move(maps));
  return PolyFunctor(
      std::move(name), std::move(source), std::move(target),
      [obs](const ObjectId& a) {
        auto it = obs->find(a);
        if (it == obs->end()) fail(ErrorCode::UnknownObject, "functor has no image for object '" + a.name + "'");
        return it->second;
      },
      [ms](const PolyMap& f) {
        auto it = ms->find(f);
        if (it == ms->end()) fail(ErrorCode::UnknownPolymap, "functor has no image for " + to_string(f));
        return it->second;
      });
}

ObjectList PolyFunctor::operator()(const ObjectList& xs) const {
  ObjectList out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(objects_(x));
  return out;
}

Boundary PolyFunctor::operator()(const Boundary& b) const { return Boundary{(*this)(b.domain), (*this)(b.codomain)}; }

PolyFunctor identity_functor(PolycatPtr p) {
  return PolyFunctor("id(" + p->name() + ")", p, p, [](const ObjectId& a) { return a; },
                     [](const PolyMap& f) { return f; });
}

PolyFunctor unique_functor_to_terminal(PolycatPtr p) {
  PolycatPtr t = terminal(p->arity_bound());
  const ObjectId star = MonoidPolycategory::star();
  return PolyFunctor(
      "!(" + p->name() + ")", p, t, [star](const ObjectId&) { return star; },
      [star](const PolyMap& f) {
        return PolyMap{"!", Boundary{ObjectList(f.dom().size(), star), ObjectList(f.cod().size(), star)}};
      });
}

PolyFunctor compose_functors(const PolyFunctor& q, const PolyFunctor& p) {
  return PolyFunctor(
      q.name() + "∘" + p.name(), p.source_ptr(), q.target_ptr(),
      [q, p](const ObjectId& a) { return q(p(a)); }, [q, p](const PolyMap& f) { return q(p(f)); });
}

std::vector<std::string> FunctorReport::lines() const {
  std::vector<std::string> out;
  out.push_back("polymaps checked: " + std::to_string(checked_maps));
  out.push_back("identities checked: " + std::to_string(checked_identities));
  out.push_back("composites checked: " + std::to_string(checked_composites));
  for (const auto& f : failures) out.push_back("failure: " + f);
  return out;
}

FunctorReport check_functor(const PolyFunctor& F) {
  FunctorReport r;
  r.functor = F.name();
  r.bound = F.source().arity_bound();
  Scope s(F.source());
  const FinPolycategory& t = F.target();
  std::vector<std::optional<PolyMap>> image(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    ++r.checked_maps;
    try {
      PolyMap im = F(s.at(k));
      if (im.boundary != F(s.at(k).boundary)) {
        r.failures.push_back("boundary: " + to_string(s.at(k)) + " maps to " + to_string(im));
        continue;
      }
      if (!t.contains(im)) {
        r.failures.push_back("image: " + to_string(im) + " is not in " + t.name());
        continue;
      }
      image[k] = im;
    } catch (const Error& e) {
      r.failures.push_back("image: " + to_string(s.at(k)) + ": " + e.what());
    }
  }
  for (const auto& a : F.source().objects()) {
    ++r.checked_identities;
    try {
      PolyMap im = F(F.source().identity(a));
      PolyMap want = t.identity(F(a));
      if (im != want) r.failures.push_back("identity: F(id " + a.name + ") = " + to_string(im) + " but id = " + to_string(want));
    } catch (const Error& e) {
      r.failures.push_back("identity: " + a.name + ": " + e.what());
    }
  }
  for (std::size_t f = 0; f < s.size(); ++f) {
    if (!image[f]) continue;
    for (std::size_t i = 0; i < s.at(f).cod().size(); ++i)
      for (std::size_t g = 0; g < s.size(); ++g) {
        if (!image[g]) continue;
        for (std::size_t j = 0; j < s.at(g).dom().size(); ++j) {
          auto c = s.compose(f, i, g, j);
          if (!c || !image[*c]) continue;
          ++r.checked_composites;
          std::ostringstream w;
          w << "composite: f=" << to_string(s.at(f)) << " i=" << i << " g=" << to_string(s.at(g)) << " j=" << j;
          try {
            PolyMap want = t.compose(CompositionRequest{*image[f], i, *image[g], j});
            if (*image[*c] != want) {
              w << ": F(g∘f)=" << to_string(*image[*c]) << " but F(g)∘F(f)=" << to_string(want);
              r.failures.push_back(w.str());
            }
          } catch (const Error& e) {
            w << ": " << e.what();
            r.failures.push_back(w.str());
          }
        }
      }
  }
  std::sort(r.failures.begin(), r.failures.end());
  return r;
}

}  // namespace polycat
