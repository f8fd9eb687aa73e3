#include "polycat/boundary.hpp"

#include "polycat/error.hpp"

namespace polycat {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

ObjectList slice(const ObjectList& xs, std::size_t from, std::size_t to) {
  return ObjectList(xs.begin() + static_cast<std::ptrdiff_t>(from),
                    xs.begin() + static_cast<std::ptrdiff_t>(to));
}

void append(ObjectList& out, const ObjectList& xs) { out.insert(out.end(), xs.begin(), xs.end()); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

ObjectList parse_list(const std::string& text) {
  ObjectList out;
  std::string t = trim(text);
  if (t.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = t.find(',', start);
    std::string item = trim(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (item.empty()) fail(ErrorCode::SyntaxError, "empty object name in list '" + text + "'");
    out.emplace_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string PlanarityViolation::describe() const {
  if (left && right) return "both sides: Δ1 and Γ1′ nonempty, Δ2 and Γ2′ nonempty";
  if (left) return "left side: Δ1 and Γ1′ both nonempty";
  if (right) return "right side: Δ2 and Γ2′ both nonempty";
  return "none";
}

PlanResult plan_composition(const Boundary& fb, std::size_t i, const Boundary& gb,
                            std::size_t j) {
  if (i >= fb.codomain.size())
    fail(ErrorCode::IndexOutOfRange, "output index " + std::to_string(i) + " out of range for " + to_string(fb));
  if (j >= gb.domain.size())
    fail(ErrorCode::IndexOutOfRange, "input index " + std::to_string(j) + " out of range for " + to_string(gb));
  if (fb.codomain[i] != gb.domain[j])
    fail(ErrorCode::TypeMismatch,
         "output " + fb.codomain[i].name + " does not match input " + gb.domain[j].name);

  PlanarityViolation v;
  v.left = i > 0 && j > 0;
  v.right = i + 1 < fb.codomain.size() && j + 1 < gb.domain.size();
  if (v.left || v.right) return v;

  Boundary out;
  append(out.domain, slice(gb.domain, 0, j));
  append(out.domain, fb.domain);
  append(out.domain, slice(gb.domain, j + 1, gb.domain.size()));
  append(out.codomain, slice(fb.codomain, 0, i));
  append(out.codomain, gb.codomain);
  append(out.codomain, slice(fb.codomain, i + 1, fb.codomain.size()));
  return out;
}

Boundary composite_boundary(const Boundary& fb, std::size_t i, const Boundary& gb,
                            std::size_t j) {
  auto r = plan_composition(fb, i, gb, j);
  if (auto* v = std::get_if<PlanarityViolation>(&r))
    fail(ErrorCode::PlanarityViolation, v->describe());
  return std::get<Boundary>(std::move(r));
}

bool is_planar_cut(const Boundary& fb, std::size_t i, const Boundary& gb, std::size_t j) {
  if (i >= fb.codomain.size() || j >= gb.domain.size()) return false;
  if (fb.codomain[i] != gb.domain[j]) return false;
  bool left = i > 0 && j > 0;
  bool right = i + 1 < fb.codomain.size() && j + 1 < gb.domain.size();
  return !left && !right;
}

std::string to_string(const ObjectList& objects) {
  std::string out;
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (k) out += ',';
    out += objects[k].name;
  }
  return out;
}

std::string to_string(const Boundary& b) { return to_string(b.domain) + "->" + to_string(b.codomain); }

std::string to_string(const PolyMap& f) { return f.id + ":" + to_string(f.boundary); }

Boundary parse_boundary(const std::string& text) {
  auto arrow = text.find("->");
  if (arrow == std::string::npos) fail(ErrorCode::SyntaxError, "boundary '" + text + "' lacks '->'");
  if (text.find("->", arrow + 2) != std::string::npos)
    fail(ErrorCode::SyntaxError, "boundary '" + text + "' has more than one '->'");
  return Boundary{parse_list(text.substr(0, arrow)), parse_list(text.substr(arrow + 2))};
}

PolyMap parse_polymap(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorCode::SyntaxError, "polymap '" + text + "' lacks 'id:'");
  std::string id = trim(text.substr(0, colon));
  if (id.empty()) fail(ErrorCode::SyntaxError, "polymap '" + text + "' has an empty id");
  return PolyMap{id, parse_boundary(text.substr(colon + 1))};
}

}  // namespace polycat

std::size_t std::hash<polycat::Boundary>::operator()(const polycat::Boundary& b) const noexcept {
  std::size_t h = 0;
  for (const auto& o : b.domain) h = polycat::mix(h, std::hash<std::string>{}(o.name));
  h = polycat::mix(h, 0x51ed);
  for (const auto& o : b.codomain) h = polycat::mix(h, std::hash<std::string>{}(o.name));
  return h;
}

std::size_t std::hash<polycat::PolyMap>::operator()(const polycat::PolyMap& f) const noexcept {
  return polycat::mix(std::hash<polycat::Boundary>{}(f.boundary), std::hash<std::string>{}(f.id));
}
