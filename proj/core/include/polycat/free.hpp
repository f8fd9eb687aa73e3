#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "polycat/boundary.hpp"

namespace polycat::trees {

struct Operation {
  std::string name;
  ObjectList domain;
  ObjectList codomain;
};

class PolySignature {
 public:
  // Throws UnknownType for unresolved types and InvariantError for duplicate names.
  PolySignature(std::vector<ObjectId> types, std::vector<Operation> operations);

  const std::vector<ObjectId>& types() const { return types_; }
  const std::vector<Operation>& operations() const { return ops_; }
  bool has_type(const ObjectId& a) const;
  const Operation& operation(const std::string& name) const;

 private:
  std::vector<ObjectId> types_;
  std::vector<Operation> ops_;
};

enum class PortKind { BoundaryIn, NodeOut, NodeIn, BoundaryOut };

struct Port {
  PortKind kind = PortKind::BoundaryIn;
  std::size_t node = 0;   // unused for boundary ports
  std::size_t index = 0;  // input/output number

  auto operator<=>(const Port&) const = default;
};

struct TreeNode {
  std::size_t id = 0;
  std::string op;
  std::size_t inputs = 0;
  std::size_t outputs = 0;
};

// Edges run from a boundary input or node output to a node input or boundary output.
struct TreeEdge {
  std::size_t id = 0;
  ObjectId type;
  Port source;
  Port target;
};

struct TreePolymap {
  std::vector<TreeNode> nodes;
  std::vector<TreeEdge> edges;
  Boundary boundary;
};

struct CanonicalEncoding {
  std::string text;

  auto operator<=>(const CanonicalEncoding&) const = default;
};

TreePolymap identity_tree(const PolySignature& sig, const ObjectId& a);
TreePolymap generator_tree(const PolySignature& sig, const std::string& op);

// Output i of t1 into input j of t2.
TreePolymap graft(const TreePolymap& t1, std::size_t i, const TreePolymap& t2, std::size_t j);

// Port saturation, typing against the signature, tree shape and planarity.
void validate(const PolySignature& sig, const TreePolymap& t);

// Planar traversal from the leftmost boundary edge; MalformedTree when the
// tree is disconnected or its boundary order admits no planar embedding.
CanonicalEncoding canonical_encoding(const TreePolymap& t);

// Trees with the given boundary and at most max_nodes nodes, sorted by encoding.
std::vector<TreePolymap> enumerate(const PolySignature& sig, const Boundary& b, std::size_t max_nodes);
// Every tree with at most max_nodes nodes, any boundary, sorted by encoding.
std::vector<TreePolymap> enumerate_all(const PolySignature& sig, std::size_t max_nodes);

std::string to_dot(const TreePolymap& t, const std::string& graph_name = "tree");

struct FreeLawReport {
  std::size_t max_nodes = 0;
  std::array<std::size_t, 5> instances{};
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Every instance of the five laws whose trees total at most max_nodes nodes,
// compared by canonical encoding.
FreeLawReport check_free_laws(const PolySignature& sig, std::size_t max_nodes);

}  // namespace polycat::trees
