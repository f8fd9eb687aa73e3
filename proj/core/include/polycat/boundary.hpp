#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace polycat {

struct ObjectId {
  std::string name;

  ObjectId() = default;
  ObjectId(std::string n) : name(std::move(n)) {}
  ObjectId(const char* n) : name(n) {}

  auto operator<=>(const ObjectId&) const = default;
  bool operator==(const ObjectId&) const = default;
};

using ObjectList = std::vector<ObjectId>;

struct Boundary {
  ObjectList domain;
  ObjectList codomain;

  std::size_t arity_in() const { return domain.size(); }
  std::size_t arity_out() const { return codomain.size(); }

  auto operator<=>(const Boundary&) const = default;
  bool operator==(const Boundary&) const = default;
};

struct PolyMap {
  std::string id;
  Boundary boundary;

  const ObjectList& dom() const { return boundary.domain; }
  const ObjectList& cod() const { return boundary.codomain; }

  auto operator<=>(const PolyMap&) const = default;
  bool operator==(const PolyMap&) const = default;
};

// Cut output i of f into input j of g.
struct CompositionRequest {
  PolyMap f;
  std::size_t i = 0;
  PolyMap g;
  std::size_t j = 0;
};

// Which facing context pairs are both nonempty: left is (Δ1, Γ1′), right is (Δ2, Γ2′).
struct PlanarityViolation {
  bool left = false;
  bool right = false;

  std::string describe() const;
  bool operator==(const PlanarityViolation&) const = default;
};

using PlanResult = std::variant<Boundary, PlanarityViolation>;

// Composite boundary of cutting output i of fb into input j of gb:
// dom = gb.dom[0,j) ++ fb.dom ++ gb.dom(j,..], cod = fb.cod[0,i) ++ gb.cod ++ fb.cod(i,..].
// Throws IndexOutOfRange or TypeMismatch; a crossing cut is reported as a value.
PlanResult plan_composition(const Boundary& fb, std::size_t i, const Boundary& gb,
                            std::size_t j);

// Same as plan_composition but throws PlanarityViolation.
Boundary composite_boundary(const Boundary& fb, std::size_t i, const Boundary& gb,
                            std::size_t j);

// Predicate form without exceptions: false on bad index, type mismatch or crossing.
bool is_planar_cut(const Boundary& fb, std::size_t i, const Boundary& gb, std::size_t j);

std::string to_string(const ObjectList& objects);
std::string to_string(const Boundary& b);
std::string to_string(const PolyMap& f);

// Text forms: "A,B->C" and "id:A,B->C"; either side may be empty.
Boundary parse_boundary(const std::string& text);
PolyMap parse_polymap(const std::string& text);

}  // namespace polycat

template <>
struct std::hash<polycat::ObjectId> {
  std::size_t operator()(const polycat::ObjectId& o) const noexcept {
    return std::hash<std::string>{}(o.name);
  }
};

template <>
struct std::hash<polycat::Boundary> {
  std::size_t operator()(const polycat::Boundary& b) const noexcept;
};

template <>
struct std::hash<polycat::PolyMap> {
  std::size_t operator()(const polycat::PolyMap& f) const noexcept;
};
