#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polycat/polycategory.hpp"

namespace polycat {

class PolyFunctor {
 public:
  using ObjectMap = std::function<ObjectId(const ObjectId&)>;
  using MapMap = std::function<PolyMap(const PolyMap&)>;

  PolyFunctor(std::string name, PolycatPtr source, PolycatPtr target, ObjectMap objects, MapMap maps);

  // Lookups outside the tables throw UnknownObject / UnknownPolymap.
  static PolyFunctor from_tables(std::string name, PolycatPtr source, PolycatPtr target,
                                 std::map<ObjectId, ObjectId> objects, std::map<PolyMap, PolyMap> maps);

  const std::string& name() const { return name_; }
  const FinPolycategory& source() const { return *source_; }
  const FinPolycategory& target() const { return *target_; }
  const PolycatPtr& source_ptr() const { return source_; }
  const PolycatPtr& target_ptr() const { return target_; }

  ObjectId operator()(const ObjectId& a) const { return objects_(a); }
  PolyMap operator()(const PolyMap& f) const { return maps_(f); }
  ObjectList operator()(const ObjectList& xs) const;
  Boundary operator()(const Boundary& b) const;

 private:
  std::string name_;
  PolycatPtr source_;
  PolycatPtr target_;
  ObjectMap objects_;
  MapMap maps_;
};

PolyFunctor identity_functor(PolycatPtr p);
// Collapses every object to * and every (m,n) polymap to the unique (m,n) arrow
// of terminal(P.arity_bound()).
PolyFunctor unique_functor_to_terminal(PolycatPtr p);
// q after p.
PolyFunctor compose_functors(const PolyFunctor& q, const PolyFunctor& p);

struct FunctorReport {
  std::string functor;
  std::size_t bound = 0;
  std::size_t checked_maps = 0;
  std::size_t checked_identities = 0;
  std::size_t checked_composites = 0;
  std::vector<std::string> failures;  // sorted

  bool passed() const { return failures.empty(); }
  std::vector<std::string> lines() const;
};

// Boundaries, identities and every in-scope composite.
FunctorReport check_functor(const PolyFunctor& f);

}  // namespace polycat
