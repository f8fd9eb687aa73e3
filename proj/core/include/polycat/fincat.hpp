#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polycat/boundary.hpp"

namespace polycat {

struct Morphism {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

// Objects and morphisms are indexed; composition is a full table.
class FinCategory {
 public:
  // compose[(g, f)] = g after f for every pair with target(f) = source(g).
  // Throws InvariantError unless the category laws hold.
  FinCategory(std::string name, ObjectList objects, std::vector<Morphism> morphisms,
              std::vector<std::size_t> identities, std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose);

  static FinCategory discrete(std::string name, ObjectList objects);

  const std::string& name() const { return name_; }
  const ObjectList& objects() const { return objects_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t object_index(const ObjectId& a) const;
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const Morphism& morphism(std::size_t k) const { return morphisms_[k]; }
  std::size_t morphism_index(const std::string& id) const;
  std::size_t identity(std::size_t object) const { return identities_[object]; }
  bool is_identity(std::size_t m) const { return identities_[morphisms_[m].source] == m; }
  // g after f.
  std::size_t compose(std::size_t g, std::size_t f) const;
  const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const;
  const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& table() const { return compose_; }

 private:
  std::string name_;
  ObjectList objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identities_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose_;
  std::vector<std::vector<std::vector<std::size_t>>> homs_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

}  // namespace polycat
