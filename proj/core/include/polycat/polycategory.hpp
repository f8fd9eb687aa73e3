#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polycat/boundary.hpp"

namespace polycat {

class MonoidPolycategory;

// A polycategory presented by finite data. Enumeration (hom, polymaps) is
// truncated at arity_bound(); composition of a MonoidPolycategory is total
// while a TablePolycategory rejects composites beyond its bound.
class FinPolycategory {
 public:
  virtual ~FinPolycategory() = default;

  virtual const std::string& name() const = 0;
  virtual const ObjectList& objects() const = 0;
  virtual std::size_t arity_bound() const = 0;
  // True when laws are only asserted for terms within the bound (a germ).
  virtual bool is_germ() const = 0;
  virtual std::vector<PolyMap> hom(const Boundary& b) const = 0;
  virtual PolyMap identity(const ObjectId& a) const = 0;
  virtual PolyMap compose(const CompositionRequest& req) const = 0;
  virtual bool contains(const PolyMap& f) const = 0;
  virtual const MonoidPolycategory* as_monoid() const { return nullptr; }

  bool has_object(const ObjectId& a) const;
  bool in_bound(const Boundary& b) const;
  // Every boundary over objects() within the bound, in canonical order.
  std::vector<Boundary> boundaries_in_scope() const;
  // Every polymap within the bound, in canonical order.
  virtual std::vector<PolyMap> polymaps() const;
};

using PolycatPtr = std::shared_ptr<const FinPolycategory>;

// Lists over the given objects of length exactly n / at most n, shortest first.
std::vector<ObjectList> lists_of_length(const ObjectList& objects, std::size_t n);
std::vector<ObjectList> lists_up_to(const ObjectList& objects, std::size_t n);

// Canonical order: total arity, input arity, boundary (by object name), id.
bool canonical_less(const PolyMap& a, const PolyMap& b);
bool canonical_less(const Boundary& a, const Boundary& b);

class MonoidPolycategory : public FinPolycategory {
 public:
  // mult[a][b] is the product a·b of elements a and b.
  MonoidPolycategory(std::string name, std::vector<std::string> elements, std::string unit,
                     std::vector<std::vector<std::size_t>> mult, std::size_t bound);

  const std::string& name() const override { return name_; }
  const ObjectList& objects() const override { return objects_; }
  std::size_t arity_bound() const override { return bound_; }
  bool is_germ() const override { return false; }
  std::vector<PolyMap> hom(const Boundary& b) const override;
  PolyMap identity(const ObjectId& a) const override;
  PolyMap compose(const CompositionRequest& req) const override;
  bool contains(const PolyMap& f) const override;
  const MonoidPolycategory* as_monoid() const override { return this; }

  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t unit() const { return unit_; }
  std::size_t mult(std::size_t a, std::size_t b) const { return mult_[a][b]; }
  const std::vector<std::vector<std::size_t>>& table() const { return mult_; }
  std::size_t element_index(const std::string& label) const;
  static const ObjectId& star();

 private:
  std::string name_;
  ObjectList objects_;
  std::vector<std::string> elements_;
  std::size_t unit_;
  std::vector<std::vector<std::size_t>> mult_;
  std::size_t bound_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct CompositionEntry {
  CompositionRequest request;
  PolyMap result;
};

class TablePolycategory : public FinPolycategory {
 public:
  // Validates every structural invariant; throws InvariantError naming the failing check.
  TablePolycategory(std::string name, ObjectList objects, std::size_t bound,
                    std::vector<PolyMap> polymaps, std::map<ObjectId, PolyMap> identities,
                    const std::vector<CompositionEntry>& entries);

  using HomFn = std::function<std::vector<PolyMap>(const Boundary&)>;
  using IdentityFn = std::function<PolyMap(const ObjectId&)>;
  using ComposeFn = std::function<PolyMap(const CompositionRequest&)>;

  // Builds the table by enumerating every boundary within the bound.
  static TablePolycategory tabulate(std::string name, ObjectList objects, std::size_t bound,
                                    const HomFn& hom, const IdentityFn& identity,
                                    const ComposeFn& compose);

  const std::string& name() const override { return name_; }
  const ObjectList& objects() const override { return objects_; }
  std::size_t arity_bound() const override { return bound_; }
  bool is_germ() const override { return true; }
  std::vector<PolyMap> hom(const Boundary& b) const override;
  PolyMap identity(const ObjectId& a) const override;
  PolyMap compose(const CompositionRequest& req) const override;
  bool contains(const PolyMap& f) const override;
  std::vector<PolyMap> polymaps() const override { return maps_; }

  std::vector<CompositionEntry> entries() const;
  const std::map<ObjectId, PolyMap>& identities() const { return identities_; }
  // Copy with one composition entry replaced; laws are not rechecked.
  TablePolycategory with_composition(const CompositionRequest& req, const PolyMap& result) const;

 private:
  TablePolycategory() = default;
  void index_maps();
  void check_totality() const;
  std::size_t index_of(const PolyMap& f) const;
  static std::uint64_t key(std::size_t f, std::size_t i, std::size_t g, std::size_t j);

  std::string name_;
  ObjectList objects_;
  std::size_t bound_ = 0;
  std::vector<PolyMap> maps_;
  std::unordered_map<PolyMap, std::size_t> index_;
  std::map<Boundary, std::vector<std::size_t>> homs_;
  std::map<ObjectId, PolyMap> identities_;
  std::unordered_map<std::uint64_t, std::size_t> table_;
};

// The trivial-monoid polycategory: one object, a unique arrow at every arity.
std::shared_ptr<MonoidPolycategory> terminal(std::size_t bound);

struct MonoidPresentation {
  std::string name;
  std::vector<std::string> elements;
  std::string unit;
  std::vector<std::vector<std::string>> mult;  // mult[a][b] = a·b
};

// Checks totality, associativity, unitality and commutativity.
std::shared_ptr<MonoidPolycategory> from_monoid(const MonoidPresentation& m, std::size_t bound);

// Tabulates P within the given bound (P's own bound when 0).
std::shared_ptr<TablePolycategory> materialize(const FinPolycategory& p, std::size_t bound = 0,
                                               std::string name = "");

}  // namespace polycat
