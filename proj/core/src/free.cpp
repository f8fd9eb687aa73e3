#include "polycat/free.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "polycat/error.hpp"

namespace polycat::trees {
namespace {

struct End {
  bool boundary = false;
  bool input = false;  // boundary side
  std::size_t node = 0;
  std::size_t pos = 0;  // boundary index or rotation slot

  bool operator==(const End&) const = default;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Rotation at a node: inputs left to right, then outputs right to left.
struct Incidence {
  std::vector<std::vector<std::size_t>> rot;
  std::vector<std::size_t> in_edge, out_edge;
  std::vector<End> src, tgt;
};

std::size_t rot_slot(const TreeNode& n, const Port& p) {
  return p.kind == PortKind::NodeIn ? p.index : n.inputs + (n.outputs - 1 - p.index);
}

Incidence incidence(const TreePolymap& t) {
  Incidence inc;
  inc.rot.resize(t.nodes.size());
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    if (t.nodes[v].id != v) fail(ErrorCode::MalformedTree, "node ids must be 0..n-1 in order");
    inc.rot[v].assign(t.nodes[v].inputs + t.nodes[v].outputs, kNone);
  }
  inc.in_edge.assign(t.boundary.domain.size(), kNone);
  inc.out_edge.assign(t.boundary.codomain.size(), kNone);
  inc.src.resize(t.edges.size());
  inc.tgt.resize(t.edges.size());
  auto claim = [&](std::size_t& slot, std::size_t e, const std::string& what) {
    if (slot != kNone) fail(ErrorCode::MalformedTree, what + " is used twice");
    slot = e;
  };
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto& ed = t.edges[e];
    const Port& s = ed.source;
    const Port& d = ed.target;
    if (s.kind == PortKind::BoundaryIn) {
      if (s.index >= inc.in_edge.size()) fail(ErrorCode::MalformedTree, "boundary input out of range");
      if (t.boundary.domain[s.index] != ed.type) fail(ErrorCode::MalformedTree, "boundary input type mismatch");
      claim(inc.in_edge[s.index], e, "boundary input " + std::to_string(s.index));
      inc.src[e] = End{true, true, 0, s.index};
    } else if (s.kind == PortKind::NodeOut) {
      if (s.node >= t.nodes.size() || s.index >= t.nodes[s.node].outputs)
        fail(ErrorCode::MalformedTree, "edge source port out of range");
      std::size_t slot = rot_slot(t.nodes[s.node], s);
      claim(inc.rot[s.node][slot], e, "node output");
      inc.src[e] = End{false, false, s.node, slot};
    } else {
      fail(ErrorCode::MalformedTree, "edge source must be a boundary input or node output");
    }
    if (d.kind == PortKind::BoundaryOut) {
      if (d.index >= inc.out_edge.size()) fail(ErrorCode::MalformedTree, "boundary output out of range");
      if (t.boundary.codomain[d.index] != ed.type) fail(ErrorCode::MalformedTree, "boundary output type mismatch");
      claim(inc.out_edge[d.index], e, "boundary output " + std::to_string(d.index));
      inc.tgt[e] = End{true, false, 0, d.index};
    } else if (d.kind == PortKind::NodeIn) {
      if (d.node >= t.nodes.size() || d.index >= t.nodes[d.node].inputs)
        fail(ErrorCode::MalformedTree, "edge target port out of range");
      std::size_t slot = rot_slot(t.nodes[d.node], d);
      claim(inc.rot[d.node][slot], e, "node input");
      inc.tgt[e] = End{false, false, d.node, slot};
    } else {
      fail(ErrorCode::MalformedTree, "edge target must be a node input or boundary output");
    }
  }
  for (auto e : inc.in_edge)
    if (e == kNone) fail(ErrorCode::MalformedTree, "unsaturated boundary input");
  for (auto e : inc.out_edge)
    if (e == kNone) fail(ErrorCode::MalformedTree, "unsaturated boundary output");
  for (const auto& r : inc.rot)
    for (auto e : r)
      if (e == kNone) fail(ErrorCode::MalformedTree, "unsaturated node port");
  std::size_t vertices = t.nodes.size() + t.boundary.domain.size() + t.boundary.codomain.size();
  if (t.edges.size() + 1 != vertices) fail(ErrorCode::MalformedTree, "edge count does not match a tree");
  return inc;
}

class Tour {
 public:
  Tour(const TreePolymap& t, const Incidence& inc) : t_(t), inc_(inc), ids_(t.nodes.size(), kNone) {}

  std::vector<End> boundary_order;
  std::size_t traversals = 0;

  void arrive(const End& y) {
    if (y.boundary) {
      out_ << (y.input ? " I" : " O") << y.pos;
      boundary_order.push_back(y);
      return;
    }
    if (ids_[y.node] == kNone) {
      ids_[y.node] = next_++;
      out_ << " [" << t_.nodes[y.node].op << "]@" << y.pos;
    } else {
      out_ << " #" << ids_[y.node] << "@" << y.pos;
    }
  }

  void edge(std::size_t e) {
    ++traversals;
    out_ << " -" << t_.edges[e].type.name;
  }

  End other(std::size_t e, const End& x) const { return inc_.src[e] == x ? inc_.tgt[e] : inc_.src[e]; }

  void start(const End& x) {
    if (x.boundary) {
      out_ << (x.input ? "I" : "O") << x.pos;
      boundary_order.push_back(x);
    } else {
      ids_[x.node] = next_++;
      out_ << "[" << t_.nodes[x.node].op << "]@" << x.pos;
    }
  }

  std::string text() const { return out_.str(); }

 private:
  const TreePolymap& t_;
  const Incidence& inc_;
  std::vector<std::size_t> ids_;
  std::size_t next_ = 0;
  std::ostringstream out_;
};

std::string tour_from_boundary(const TreePolymap& t, const Incidence& inc) {
  const std::size_t m = t.boundary.domain.size(), n = t.boundary.codomain.size();
  End start = m > 0 ? End{true, true, 0, 0} : End{true, false, 0, n - 1};
  std::size_t e = m > 0 ? inc.in_edge[0] : inc.out_edge[n - 1];
  Tour tour(t, inc);
  tour.start(start);
  End cur = start;
  const std::size_t limit = 2 * t.edges.size() + 2;
  while (true) {
    End y = tour.other(e, cur);
    tour.edge(e);
    tour.arrive(y);
    if (tour.traversals > limit) fail(ErrorCode::MalformedTree, "traversal does not close");
    if (y.boundary) {
      if (y == start) break;
      cur = y;
      continue;
    }
    const auto& r = inc.rot[y.node];
    std::size_t next = (y.pos + 1) % r.size();
    e = r[next];
    cur = End{false, false, y.node, next};
  }
  if (tour.traversals != 2 * t.edges.size()) fail(ErrorCode::MalformedTree, "tree is not connected");
  // Expected cyclic order: inputs left to right, then outputs right to left.
  std::vector<End> expected;
  for (std::size_t k = 0; k < m; ++k) expected.push_back(End{true, true, 0, k});
  for (std::size_t k = n; k-- > 0;) expected.push_back(End{true, false, 0, k});
  expected.push_back(start);
  if (tour.boundary_order != expected) fail(ErrorCode::MalformedTree, "boundary order admits no planar embedding");
  return tour.text();
}

std::string tour_from_node(const TreePolymap& t, const Incidence& inc, std::size_t v0, std::size_t p0) {
  Tour tour(t, inc);
  End start{false, false, v0, p0};
  tour.start(start);
  End cur = start;
  const std::size_t limit = 2 * t.edges.size() + 2;
  while (true) {
    std::size_t e = inc.rot[cur.node][cur.pos];
    End y = tour.other(e, cur);
    tour.edge(e);
    tour.arrive(y);
    if (tour.traversals > limit) fail(ErrorCode::MalformedTree, "traversal does not close");
    const auto& r = inc.rot[y.node];
    End next{false, false, y.node, (y.pos + 1) % r.size()};
    if (next == start) break;
    cur = next;
  }
  if (tour.traversals != 2 * t.edges.size()) fail(ErrorCode::MalformedTree, "tree is not connected");
  return tour.text();
}

Port shift_node(Port p, std::size_t off) {
  if (p.kind == PortKind::NodeIn || p.kind == PortKind::NodeOut) p.node += off;
  return p;
}

struct Entry {
  std::string key;
  TreePolymap tree;
  std::size_t nodes;
};

std::vector<std::vector<Entry>> levels(const PolySignature& sig, std::size_t max_nodes) {
  std::vector<std::vector<Entry>> lv(max_nodes + 1);
  std::unordered_set<std::string> seen;
  auto add = [&](std::size_t n, TreePolymap t) {
    std::string k = canonical_encoding(t).text;
    if (seen.insert(k).second) lv[n].push_back(Entry{k, std::move(t), n});
  };
  for (const auto& a : sig.types()) add(0, identity_tree(sig, a));
  if (max_nodes == 0) return lv;
  std::vector<TreePolymap> gens;
  for (const auto& op : sig.operations()) gens.push_back(generator_tree(sig, op.name));
  for (const auto& g : gens) add(1, g);
  for (std::size_t n = 2; n <= max_nodes; ++n) {
    for (std::size_t k = 0; k < lv[n - 1].size(); ++k) {
      const TreePolymap t = lv[n - 1][k].tree;
      for (const auto& g : gens) {
        for (std::size_t i = 0; i < t.boundary.codomain.size(); ++i)
          for (std::size_t j = 0; j < g.boundary.domain.size(); ++j)
            if (is_planar_cut(t.boundary, i, g.boundary, j)) add(n, graft(t, i, g, j));
        for (std::size_t i = 0; i < g.boundary.codomain.size(); ++i)
          for (std::size_t j = 0; j < t.boundary.domain.size(); ++j)
            if (is_planar_cut(g.boundary, i, t.boundary, j)) add(n, graft(g, i, t, j));
      }
    }
    std::sort(lv[n].begin(), lv[n].end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  }
  return lv;
}

}  // namespace

PolySignature::PolySignature(std::vector<ObjectId> types, std::vector<Operation> operations)
    : types_(std::move(types)), ops_(std::move(operations)) {
  std::set<ObjectId> ts;
  for (const auto& t : types_)
    if (!ts.insert(t).second) fail(ErrorCode::InvariantError, "duplicate type '" + t.name + "'");
  std::set<std::string> names;
  for (const auto& op : ops_) {
    if (!names.insert(op.name).second) fail(ErrorCode::InvariantError, "duplicate operation '" + op.name + "'");
    for (const auto& a : op.domain)
      if (!ts.count(a)) fail(ErrorCode::UnknownType, "operation '" + op.name + "' uses unknown type '" + a.name + "'");
    for (const auto& a : op.codomain)
      if (!ts.count(a)) fail(ErrorCode::UnknownType, "operation '" + op.name + "' uses unknown type '" + a.name + "'");
  }
}

bool PolySignature::has_type(const ObjectId& a) const {
  return std::find(types_.begin(), types_.end(), a) != types_.end();
}

const Operation& PolySignature::operation(const std::string& name) const {
  for (const auto& op : ops_)
    if (op.name == name) return op;
  fail(ErrorCode::UnknownOperation, "no operation '" + name + "'");
}

TreePolymap identity_tree(const PolySignature& sig, const ObjectId& a) {
  if (!sig.has_type(a)) fail(ErrorCode::UnknownType, "no type '" + a.name + "'");
  TreePolymap t;
  t.boundary = Boundary{{a}, {a}};
  t.edges.push_back(TreeEdge{0, a, Port{PortKind::BoundaryIn, 0, 0}, Port{PortKind::BoundaryOut, 0, 0}});
  return t;
}

TreePolymap generator_tree(const PolySignature& sig, const std::string& name) {
  const Operation& op = sig.operation(name);
  TreePolymap t;
  t.boundary = Boundary{op.domain, op.codomain};
  t.nodes.push_back(TreeNode{0, op.name, op.domain.size(), op.codomain.size()});
  for (std::size_t k = 0; k < op.domain.size(); ++k)
    t.edges.push_back(TreeEdge{t.edges.size(), op.domain[k], Port{PortKind::BoundaryIn, 0, k}, Port{PortKind::NodeIn, 0, k}});
  for (std::size_t k = 0; k < op.codomain.size(); ++k)
    t.edges.push_back(TreeEdge{t.edges.size(), op.codomain[k], Port{PortKind::NodeOut, 0, k}, Port{PortKind::BoundaryOut, 0, k}});
  return t;
}

TreePolymap graft(const TreePolymap& t1, std::size_t i, const TreePolymap& t2, std::size_t j) {
  Boundary b = composite_boundary(t1.boundary, i, t2.boundary, j);
  const std::size_t off = t1.nodes.size();
  const std::size_t m1 = t1.boundary.domain.size();
  const std::size_t n2 = t2.boundary.codomain.size();
  auto map1 = [&](Port p) {
    if (p.kind == PortKind::BoundaryIn) p.index += j;
    if (p.kind == PortKind::BoundaryOut && p.index > i) p.index += n2 - 1;
    return p;
  };
  auto map2 = [&](Port p) {
    p = shift_node(p, off);
    if (p.kind == PortKind::BoundaryIn && p.index > j) p.index += m1 - 1;
    if (p.kind == PortKind::BoundaryOut) p.index += i;
    return p;
  };
  TreePolymap t;
  t.boundary = std::move(b);
  t.nodes = t1.nodes;
  for (auto n : t2.nodes) {
    n.id += off;
    t.nodes.push_back(std::move(n));
  }
  const TreeEdge* e1 = nullptr;
  const TreeEdge* e2 = nullptr;
  for (const auto& e : t1.edges) {
    if (e.target.kind == PortKind::BoundaryOut && e.target.index == i) {
      e1 = &e;
      continue;
    }
    t.edges.push_back(TreeEdge{0, e.type, map1(e.source), map1(e.target)});
  }
  for (const auto& e : t2.edges) {
    if (e.source.kind == PortKind::BoundaryIn && e.source.index == j) {
      e2 = &e;
      continue;
    }
    t.edges.push_back(TreeEdge{0, e.type, map2(e.source), map2(e.target)});
  }
  if (!e1 || !e2) fail(ErrorCode::MalformedTree, "graft endpoints are missing");
  t.edges.push_back(TreeEdge{0, e1->type, map1(e1->source), map2(e2->target)});
  for (std::size_t k = 0; k < t.edges.size(); ++k) t.edges[k].id = k;
  return t;
}

void validate(const PolySignature& sig, const TreePolymap& t) {
  for (const auto& a : t.boundary.domain)
    if (!sig.has_type(a)) fail(ErrorCode::UnknownType, "no type '" + a.name + "'");
  for (const auto& a : t.boundary.codomain)
    if (!sig.has_type(a)) fail(ErrorCode::UnknownType, "no type '" + a.name + "'");
  for (const auto& n : t.nodes) {
    const Operation& op = sig.operation(n.op);
    if (op.domain.size() != n.inputs || op.codomain.size() != n.outputs)
      fail(ErrorCode::MalformedTree, "node " + std::to_string(n.id) + " has the wrong arity for '" + n.op + "'");
  }
  for (const auto& e : t.edges) {
    if (e.source.kind == PortKind::NodeOut && e.source.node < t.nodes.size()) {
      const Operation& op = sig.operation(t.nodes[e.source.node].op);
      if (e.source.index < op.codomain.size() && op.codomain[e.source.index] != e.type)
        fail(ErrorCode::MalformedTree, "edge " + std::to_string(e.id) + " type differs from its source port");
    }
    if (e.target.kind == PortKind::NodeIn && e.target.node < t.nodes.size()) {
      const Operation& op = sig.operation(t.nodes[e.target.node].op);
      if (e.target.index < op.domain.size() && op.domain[e.target.index] != e.type)
        fail(ErrorCode::MalformedTree, "edge " + std::to_string(e.id) + " type differs from its target port");
    }
  }
  canonical_encoding(t);
}

CanonicalEncoding canonical_encoding(const TreePolymap& t) {
  Incidence inc = incidence(t);
  std::string head = to_string(t.boundary) + "|";
  if (!t.boundary.domain.empty() || !t.boundary.codomain.empty()) return {head + tour_from_boundary(t, inc)};
  if (t.nodes.empty()) fail(ErrorCode::MalformedTree, "empty tree");
  if (t.nodes.size() == 1 && inc.rot[0].empty()) return {head + "[" + t.nodes[0].op + "]"};
  std::string best;
  bool first = true;
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    if (inc.rot[v].empty()) fail(ErrorCode::MalformedTree, "isolated node");
    for (std::size_t p = 0; p < inc.rot[v].size(); ++p) {
      std::string s = tour_from_node(t, inc, v, p);
      if (first || s < best) best = s;
      first = false;
    }
  }
  return {head + best};
}

std::vector<TreePolymap> enumerate_all(const PolySignature& sig, std::size_t max_nodes) {
  auto lv = levels(sig, max_nodes);
  std::vector<Entry> all;
  for (auto& l : lv)
    for (auto& e : l) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  std::vector<TreePolymap> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.tree));
  return out;
}

std::vector<TreePolymap> enumerate(const PolySignature& sig, const Boundary& b, std::size_t max_nodes) {
  std::vector<TreePolymap> out;
  for (auto& t : enumerate_all(sig, max_nodes))
    if (t.boundary == b) out.push_back(std::move(t));
  return out;
}

std::string to_dot(const TreePolymap& t, const std::string& graph_name) {
  std::ostringstream o;
  o << "digraph \"" << graph_name << "\" {\n  rankdir=LR;\n";
  for (std::size_t k = 0; k < t.boundary.domain.size(); ++k) o << "  in" << k << " [shape=point];\n";
  for (std::size_t k = 0; k < t.boundary.codomain.size(); ++k) o << "  out" << k << " [shape=point];\n";
  for (const auto& n : t.nodes) o << "  n" << n.id << " [label=\"" << n.op << "\"];\n";
  auto name = [](const Port& p) {
    switch (p.kind) {
      case PortKind::BoundaryIn: return "in" + std::to_string(p.index);
      case PortKind::BoundaryOut: return "out" + std::to_string(p.index);
      default: return "n" + std::to_string(p.node);
    }
  };
  std::vector<TreeEdge> edges = t.edges;
  std::sort(edges.begin(), edges.end(), [](const TreeEdge& a, const TreeEdge& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  for (const auto& e : edges) o << "  " << name(e.source) << " -> " << name(e.target) << " [label=\"" << e.type.name << "\"];\n";
  o << "}\n";
  return o.str();
}

FreeLawReport check_free_laws(const PolySignature& sig, std::size_t max_nodes) {
  FreeLawReport r;
  r.max_nodes = max_nodes;
  auto lv = levels(sig, max_nodes);
  auto enc = [](const TreePolymap& t) { return canonical_encoding(t).text; };
  auto note = [&](int law, const std::string& what) { r.failures.push_back("Eq (" + std::to_string(law) + "): " + what); };

  for (std::size_t n = 0; n <= max_nodes; ++n)
    for (const auto& e : lv[n]) {
      const auto& f = e.tree;
      for (std::size_t i = 0; i < f.boundary.codomain.size(); ++i) {
        ++r.instances[0];
        if (enc(graft(f, i, identity_tree(sig, f.boundary.codomain[i]), 0)) != e.key) note(1, e.key);
      }
      for (std::size_t j = 0; j < f.boundary.domain.size(); ++j) {
        ++r.instances[1];
        if (enc(graft(identity_tree(sig, f.boundary.domain[j]), 0, f, j)) != e.key) note(2, e.key);
      }
    }

  auto each = [&](std::size_t budget, auto&& fn) {
    for (std::size_t n = 0; n <= budget && n <= max_nodes; ++n)
      for (const auto& e : lv[n]) fn(e);
  };

  // Associativity.
  each(max_nodes, [&](const Entry& fe) {
    const auto& f = fe.tree;
    each(max_nodes - fe.nodes, [&](const Entry& ge) {
      const auto& g = ge.tree;
      for (std::size_t i = 0; i < f.boundary.codomain.size(); ++i)
        for (std::size_t j = 0; j < g.boundary.domain.size(); ++j) {
          if (!is_planar_cut(f.boundary, i, g.boundary, j)) continue;
          TreePolymap gf = graft(f, i, g, j);
          each(max_nodes - fe.nodes - ge.nodes, [&](const Entry& he) {
            const auto& h = he.tree;
            for (std::size_t k = 0; k < g.boundary.codomain.size(); ++k)
              for (std::size_t l = 0; l < h.boundary.domain.size(); ++l) {
                if (!is_planar_cut(gf.boundary, i + k, h.boundary, l)) continue;
                if (!is_planar_cut(g.boundary, k, h.boundary, l)) continue;
                TreePolymap hg = graft(g, k, h, l);
                if (!is_planar_cut(f.boundary, i, hg.boundary, l + j)) continue;
                ++r.instances[2];
                if (enc(graft(gf, i + k, h, l)) != enc(graft(f, i, hg, l + j)))
                  note(3, fe.key + " ; " + ge.key + " ; " + he.key);
              }
          });
        }
    });
  });

  // Interchange at two inputs of h.
  each(max_nodes, [&](const Entry& he) {
    const auto& h = he.tree;
    const std::size_t nh = h.boundary.domain.size();
    if (nh < 2) return;
    each(max_nodes - he.nodes, [&](const Entry& fe) {
      const auto& f = fe.tree;
      each(max_nodes - he.nodes - fe.nodes, [&](const Entry& ge) {
        const auto& g = ge.tree;
        for (std::size_t a = 0; a < nh; ++a)
          for (std::size_t b = a + 1; b < nh; ++b)
            for (std::size_t i = 0; i < f.boundary.codomain.size(); ++i)
              for (std::size_t k = 0; k < g.boundary.codomain.size(); ++k) {
                if (!is_planar_cut(f.boundary, i, h.boundary, a) || !is_planar_cut(g.boundary, k, h.boundary, b)) continue;
                TreePolymap hg = graft(g, k, h, b);
                TreePolymap hf = graft(f, i, h, a);
                std::size_t pb = b - 1 + f.boundary.domain.size();
                if (!is_planar_cut(f.boundary, i, hg.boundary, a) || !is_planar_cut(g.boundary, k, hf.boundary, pb)) continue;
                ++r.instances[3];
                if (enc(graft(f, i, hg, a)) != enc(graft(g, k, hf, pb))) note(4, he.key + " ; " + fe.key + " ; " + ge.key);
              }
      });
    });
  });

  // Interchange at two outputs of f.
  each(max_nodes, [&](const Entry& fe) {
    const auto& f = fe.tree;
    const std::size_t nf = f.boundary.codomain.size();
    if (nf < 2) return;
    each(max_nodes - fe.nodes, [&](const Entry& ge) {
      const auto& g = ge.tree;
      each(max_nodes - fe.nodes - ge.nodes, [&](const Entry& he) {
        const auto& h = he.tree;
        for (std::size_t a = 0; a < nf; ++a)
          for (std::size_t b = a + 1; b < nf; ++b)
            for (std::size_t j = 0; j < g.boundary.domain.size(); ++j)
              for (std::size_t l = 0; l < h.boundary.domain.size(); ++l) {
                if (!is_planar_cut(f.boundary, a, g.boundary, j) || !is_planar_cut(f.boundary, b, h.boundary, l)) continue;
                TreePolymap gf = graft(f, a, g, j);
                TreePolymap hf = graft(f, b, h, l);
                std::size_t pb = b - 1 + g.boundary.codomain.size();
                if (!is_planar_cut(gf.boundary, pb, h.boundary, l) || !is_planar_cut(hf.boundary, a, g.boundary, j)) continue;
                ++r.instances[4];
                if (enc(graft(gf, pb, h, l)) != enc(graft(hf, a, g, j))) note(5, fe.key + " ; " + ge.key + " ; " + he.key);
              }
      });
    });
  });
  std::sort(r.failures.begin(), r.failures.end());
  return r;
}

}  // namespace polycat::trees
