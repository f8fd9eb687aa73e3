#include "polycat_cli/formats.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "polycat/corpus.hpp"
#include "polycat/error.hpp"

namespace polycat::cli {
namespace {

[[noreturn]] void schema(const Document& d, const std::string& msg) {
  fail(ErrorCode::SchemaError, (d.path.empty() ? std::string("/") : d.path) + ": " + msg);
}

bool has(const Document& d, const std::string& key) { return d.value.is_object() && d.value.contains(key); }

Document child(const Document& d, const std::string& key) {
  if (!d.value.is_object()) schema(d, "expected an object");
  if (!d.value.contains(key)) schema(d, "missing field '" + key + "'");
  return {d.value.at(key), d.dir, d.path + "/" + key};
}

Document item(const Document& d, std::size_t k) { return {d.value.at(k), d.dir, d.path + "/" + std::to_string(k)}; }

std::vector<Document> items(const Document& d) {
  if (!d.value.is_array()) schema(d, "expected an array");
  std::vector<Document> out;
  for (std::size_t k = 0; k < d.value.size(); ++k) out.push_back(item(d, k));
  return out;
}

std::string str(const Document& d) {
  if (!d.value.is_string()) schema(d, "expected a string");
  return d.value.get<std::string>();
}

std::size_t num(const Document& d) {
  if (!d.value.is_number_unsigned() && !(d.value.is_number_integer() && d.value.get<long long>() >= 0))
    schema(d, "expected a non-negative integer");
  return d.value.get<std::size_t>();
}

std::vector<std::string> strings(const Document& d) {
  std::vector<std::string> out;
  for (const auto& x : items(d)) out.push_back(str(x));
  return out;
}

ObjectList object_list(const Document& d) {
  ObjectList out;
  for (const auto& s : strings(d)) out.emplace_back(s);
  return out;
}

Rational rational(const Document& d) {
  try {
    return parse_rational(str(d));
  } catch (const Error& e) {
    schema(d, e.detail());
  }
}

Vector vector_of(const Document& d) {
  Vector v;
  for (const auto& x : items(d)) v.push_back(rational(x));
  return v;
}

std::string name_or(const Document& d, const std::string& fallback) { return has(d, "name") ? str(child(d, "name")) : fallback; }

// A reference: inline object or file name relative to the document.
Document resolve(const Document& d) {
  if (d.value.is_string()) return open_document(d.dir / d.value.get<std::string>());
  if (!d.value.is_object()) schema(d, "expected an object or a file name");
  return d;
}

PolyMap polymap_text(const Document& d) {
  try {
    return parse_polymap(str(d));
  } catch (const Error& e) {
    schema(d, e.detail());
  }
}

std::string kind_in(const Document& d) { return str(child(d, "kind")); }

void expect_kind(const Document& d, const std::set<std::string>& kinds) {
  const std::string k = kind_in(d);
  if (!kinds.count(k)) {
    std::string all;
    for (const auto& s : kinds) all += (all.empty() ? "" : " or ") + s;
    schema(child(d, "kind"), "expected kind " + all + ", got '" + k + "'");
  }
}

std::size_t object_in(const FinCategory& c, const Document& d) {
  const std::string n = str(d);
  for (std::size_t k = 0; k < c.object_count(); ++k)
    if (c.objects()[k].name == n) return k;
  schema(d, "no object '" + n + "' in " + c.name());
}

std::vector<std::size_t> tuple_in(const std::vector<CatPtr>& cats, const Document& d) {
  auto xs = items(d);
  if (xs.size() != cats.size()) schema(d, "expected " + std::to_string(cats.size()) + " objects");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < xs.size(); ++k) out.push_back(object_in(*cats[k], xs[k]));
  return out;
}

std::size_t morphism_in(const FinCategory& c, const Document& d) {
  try {
    return c.morphism_index(str(d));
  } catch (const Error& e) {
    schema(d, e.detail());
  }
}

// Element reference [name, outs, ins].
struct ElementRef {
  std::string name;
  std::vector<std::size_t> outs, ins;
};

ElementRef element_ref(const FinDistributor& dist, const Document& d) {
  auto xs = items(d);
  if (xs.size() != 3) schema(d, "expected [name, outputs, inputs]");
  return {str(xs[0]), tuple_in(dist.outputs(), xs[1]), tuple_in(dist.inputs(), xs[2])};
}

std::size_t element_in(const FinDistributor& dist, const Document& d) {
  auto r = element_ref(dist, d);
  auto x = dist.find(r.outs, r.ins, r.name);
  if (!x) schema(d, "no element '" + r.name + "' at that tuple of " + dist.name());
  return *x;
}

DistPtr distributor_body(const Document& d, std::string name, std::vector<CatPtr> inputs, std::vector<CatPtr> outputs) {
  using Tuple = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
  std::map<Tuple, std::vector<std::string>> elements;
  for (const auto& e : items(child(d, "elements"))) {
    auto xs = items(e);
    if (xs.size() != 3) schema(e, "expected [name, outputs, inputs]");
    elements[{tuple_in(outputs, xs[1]), tuple_in(inputs, xs[2])}].push_back(str(xs[0]));
  }
  std::map<std::tuple<Position, std::size_t, Tuple, std::string>, std::string> actions;
  if (has(d, "actions"))
    for (const auto& a : items(child(d, "actions"))) {
      auto xs = items(a);
      if (xs.size() != 6) schema(a, "expected [variable, morphism, outputs, inputs, element, image]");
      Position var;
      try {
        var = parse_position(str(xs[0]));
      } catch (const Error& e) {
        schema(xs[0], e.detail());
      }
      const auto& cats = var.side == Side::In ? inputs : outputs;
      if (var.index >= cats.size()) schema(xs[0], "no such variable");
      actions[{var, morphism_in(*cats[var.index], xs[1]), {tuple_in(outputs, xs[2]), tuple_in(inputs, xs[3])}, str(xs[4])}] =
          str(xs[5]);
    }
  const std::string where = d.path;
  auto dist = FinDistributor::tabulate(
      std::move(name), inputs, outputs,
      [&](const std::vector<std::size_t>& o, const std::vector<std::size_t>& i) {
        auto it = elements.find({o, i});
        return it == elements.end() ? std::vector<std::string>{} : it->second;
      },
      [&](const Position& var, std::size_t mo, const DistElement& x) {
        const auto& cat = var.side == Side::In ? *inputs[var.index] : *outputs[var.index];
        if (cat.is_identity(mo)) return x.name;
        auto it = actions.find({var, mo, {x.outs, x.ins}, x.name});
        if (it == actions.end())
          fail(ErrorCode::SchemaError, where + ": no action of " + cat.morphism(mo).id + " at " + to_string(var) + " on " + x.name);
        return it->second;
      });
  return std::make_shared<FinDistributor>(std::move(dist));
}

json tuple_json(const std::vector<CatPtr>& cats, const std::vector<std::size_t>& t) {
  json a = json::array();
  for (std::size_t k = 0; k < t.size(); ++k) a.push_back(cats[k]->objects()[t[k]].name);
  return a;
}

json element_json(const FinDistributor& d, std::size_t x) {
  const auto& e = d.element(x);
  return json::array({e.name, tuple_json(d.outputs(), e.outs), tuple_json(d.inputs(), e.ins)});
}

json distributor_body_json(const FinDistributor& d) {
  json j;
  j["name"] = d.name();
  json els = json::array();
  for (std::size_t x = 0; x < d.size(); ++x) els.push_back(element_json(d, x));
  j["elements"] = els;
  json acts = json::array();
  for (int side = 0; side < 2; ++side) {
    const auto& cats = side == 0 ? d.inputs() : d.outputs();
    for (std::size_t v = 0; v < cats.size(); ++v) {
      Position var{side == 0 ? Side::In : Side::Out, v};
      for (std::size_t mo = 0; mo < cats[v]->morphisms().size(); ++mo) {
        if (cats[v]->is_identity(mo)) continue;
        for (std::size_t x = 0; x < d.size(); ++x) {
          if (!d.applies(var, mo, x)) continue;
          const auto& e = d.element(x);
          acts.push_back(json::array({to_string(var), cats[v]->morphism(mo).id, tuple_json(d.outputs(), e.outs),
                                      tuple_json(d.inputs(), e.ins), e.name, d.element(d.act(var, mo, x)).name}));
        }
      }
    }
  }
  j["actions"] = acts;
  return j;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::vector<std::size_t> dims_of(const Document& d) {
  std::vector<std::size_t> out;
  for (const auto& x : items(d)) out.push_back(num(x));
  return out;
}

}  // namespace

std::size_t default_bound() {
  if (const char* e = std::getenv("POLYCAT_ARITY_BOUND")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(e, &end, 10);
    if (end == e || *end != '\0' || v == 0 || v > 15)
      fail(ErrorCode::SchemaError, "POLYCAT_ARITY_BOUND must be an integer in 1..15");
    return v;
  }
  return 4;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < upto; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    auto pos = what.find("parse error");
    fail(ErrorCode::SyntaxError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                     (pos == std::string::npos ? what : what.substr(pos)));
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::SyntaxError, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.string());
}

Document open_document(const std::filesystem::path& path) {
  return {read_json_file(path), path.parent_path(), path.filename().string() + ":"};
}

std::string kind_of(const Document& d) { return kind_in(d); }

PolycatPtr load_polycat(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"monoid-polycat", "table-polycat"});
  if (kind_in(d) == "monoid-polycat") {
    MonoidPresentation m;
    m.name = name_or(d, "monoid");
    m.elements = strings(child(d, "elements"));
    m.unit = str(child(d, "unit"));
    for (const auto& row : items(child(d, "mult"))) m.mult.push_back(strings(row));
    const std::size_t bound = has(d, "bound") ? num(child(d, "bound")) : default_bound();
    if (bound == 0 || bound > 15) schema(child(d, "bound"), "bound must lie in 1..15");
    return from_monoid(m, bound);
  }
  const std::string name = name_or(d, "table");
  const ObjectList objects = object_list(child(d, "objects"));
  const std::size_t bound = num(child(d, "bound"));
  std::vector<PolyMap> maps;
  for (const auto& x : items(child(d, "polymaps"))) maps.push_back(polymap_text(x));
  std::map<ObjectId, PolyMap> ids;
  const Document idd = child(d, "identities");
  if (!idd.value.is_object()) schema(idd, "expected an object");
  for (const auto& [k, v] : idd.value.items()) {
    Document x = child(idd, k);
    ids[ObjectId(k)] = PolyMap{str(x), Boundary{{ObjectId(k)}, {ObjectId(k)}}};
  }
  std::vector<CompositionEntry> entries;
  for (const auto& e : items(child(d, "compose"))) {
    auto xs = items(e);
    if (xs.size() != 5) schema(e, "expected [f, i, g, j, result]");
    entries.push_back({{polymap_text(xs[0]), num(xs[1]), polymap_text(xs[2]), num(xs[3])}, polymap_text(xs[4])});
  }
  return std::make_shared<TablePolycategory>(name, objects, bound, maps, ids, entries);
}

PolyFunctor load_functor(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"functor"});
  const std::string name = name_or(d, "functor");
  PolycatPtr source = load_polycat(child(d, "source"));
  PolycatPtr target = load_polycat(child(d, "target"));
  std::map<ObjectId, ObjectId> objects;
  const Document od = child(d, "objects");
  if (!od.value.is_object()) schema(od, "expected an object");
  for (const auto& [k, v] : od.value.items()) objects[ObjectId(k)] = ObjectId(str(child(od, k)));
  for (const auto& a : source->objects())
    if (!objects.count(a)) schema(od, "no image for object '" + a.name + "'");
  if (has(d, "labels")) {
    const Document ld = child(d, "labels");
    if (!ld.value.is_object()) schema(ld, "expected an object");
    std::map<std::string, std::string> labels;
    for (const auto& [k, v] : ld.value.items()) labels[k] = str(child(ld, k));
    return relabel_functor(name, source, target, objects, labels);
  }
  std::map<PolyMap, PolyMap> maps;
  for (const auto& e : items(child(d, "polymaps"))) {
    auto xs = items(e);
    if (xs.size() != 2) schema(e, "expected [source polymap, target polymap]");
    maps[polymap_text(xs[0])] = polymap_text(xs[1]);
  }
  return PolyFunctor::from_tables(name, source, target, objects, maps);
}

CatPtr load_fincat(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"fincat"});
  const std::string name = name_or(d, "category");
  const ObjectList objects = object_list(child(d, "objects"));
  std::map<std::string, std::size_t> obj;
  for (std::size_t k = 0; k < objects.size(); ++k) obj[objects[k].name] = k;
  auto object_at = [&](const Document& x) {
    auto it = obj.find(str(x));
    if (it == obj.end()) schema(x, "unknown object '" + str(x) + "'");
    return it->second;
  };
  std::vector<Morphism> ms;
  std::map<std::string, std::size_t> mor;
  for (const auto& e : items(child(d, "morphisms"))) {
    auto xs = items(e);
    if (xs.size() != 3) schema(e, "expected [id, source, target]");
    mor[str(xs[0])] = ms.size();
    ms.push_back({str(xs[0]), object_at(xs[1]), object_at(xs[2])});
  }
  auto morphism_at = [&](const Document& x) {
    auto it = mor.find(str(x));
    if (it == mor.end()) schema(x, "unknown morphism '" + str(x) + "'");
    return it->second;
  };
  std::vector<std::size_t> ids(objects.size(), 0);
  const Document idd = child(d, "identities");
  for (std::size_t k = 0; k < objects.size(); ++k) ids[k] = morphism_at(child(idd, objects[k].name));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
  if (has(d, "compose"))
    for (const auto& e : items(child(d, "compose"))) {
      auto xs = items(e);
      if (xs.size() != 3) schema(e, "expected [g, f, g after f]");
      comp[{morphism_at(xs[0]), morphism_at(xs[1])}] = morphism_at(xs[2]);
    }
  for (std::size_t m = 0; m < ms.size(); ++m) {
    comp.emplace(std::make_pair(ids[ms[m].target], m), m);
    comp.emplace(std::make_pair(m, ids[ms[m].source]), m);
  }
  return std::make_shared<FinCategory>(name, objects, ms, ids, comp);
}

DistPtr load_distributor(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"distributor"});
  std::vector<CatPtr> ins, outs;
  for (const auto& x : items(child(d, "inputs"))) ins.push_back(load_fincat(x));
  for (const auto& x : items(child(d, "outputs"))) outs.push_back(load_fincat(x));
  return distributor_body(d, name_or(d, "distributor"), ins, outs);
}

LaxNormalFunctor load_laxfunctor(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"laxfunctor"});
  PolycatPtr base = load_polycat(child(d, "base"));
  if (has(d, "preset")) {
    const Document pd = child(d, "preset");
    if (str(pd) != "singletons") schema(pd, "unknown preset '" + str(pd) + "'");
    LaxNormalFunctor f = singleton_functor(base);
    if (has(d, "name")) f.name = str(child(d, "name"));
    return f;
  }
  LaxNormalFunctor f;
  f.name = name_or(d, "laxfunctor");
  f.base = base;
  const Document fd = child(d, "fibres");
  for (const auto& a : base->objects()) f.fibres[a] = load_fincat(child(fd, a.name));
  const Scope s(*base);
  for (const auto& e : items(child(d, "distributors"))) {
    const Document pm = child(e, "polymap");
    const PolyMap m = polymap_text(pm);
    if (!s.find(m)) schema(pm, to_string(m) + " is not a polymap of the base within its bound");
    std::vector<CatPtr> ins, outs;
    for (const auto& a : m.dom()) ins.push_back(f.fibres.at(a));
    for (const auto& a : m.cod()) outs.push_back(f.fibres.at(a));
    f.dists[m] = distributor_body(e, name_or(e, to_string(m)), ins, outs);
  }
  for (const auto& m : s.maps())
    if (!f.dists.count(m)) schema(child(d, "distributors"), "no distributor over " + to_string(m));
  const Document nd = child(d, "normality");
  for (const auto& a : base->objects()) {
    const auto& dist = *f.dists.at(s.at(s.identity(a)));
    const auto& cat = *f.fibres.at(a);
    std::vector<std::size_t> norm(dist.size(), cat.morphisms().size());
    for (const auto& e : items(child(nd, a.name))) {
      auto xs = items(e);
      if (xs.size() != 2) schema(e, "expected [element, morphism]");
      norm[element_in(dist, xs[0])] = morphism_in(cat, xs[1]);
    }
    for (std::size_t x = 0; x < norm.size(); ++x)
      if (norm[x] == cat.morphisms().size()) schema(child(nd, a.name), "no morphism for element " + dist.element(x).name);
    f.normality[a] = std::move(norm);
  }
  for (const auto& e : items(child(d, "mu"))) {
    CompositionKey k{polymap_text(child(e, "f")), num(child(e, "i")), polymap_text(child(e, "g")), num(child(e, "j"))};
    auto c = s.find(k.f) && s.find(k.g) ? s.compose(s.index(k.f), k.i, s.index(k.g), k.j) : std::nullopt;
    if (!c) schema(e, to_string(k) + " is not an in-scope composite of the base");
    const auto& p = *f.dists.at(k.f);
    const auto& q = *f.dists.at(k.g);
    const auto& r = *f.dists.at(s.at(*c));
    auto& t = f.mu[k];
    for (const auto& row : items(child(e, "table"))) {
      auto xs = items(row);
      if (xs.size() != 3) schema(row, "expected [x, y, z]");
      t[{element_in(p, xs[0]), element_in(q, xs[1])}] = element_in(r, xs[2]);
    }
  }
  return f;
}

trees::PolySignature load_signature(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"signature"});
  std::vector<ObjectId> types(object_list(child(d, "types")));
  std::vector<trees::Operation> ops;
  for (const auto& e : items(child(d, "operations")))
    ops.push_back({str(child(e, "name")), object_list(child(e, "domain")), object_list(child(e, "codomain"))});
  return trees::PolySignature(types, ops);
}

PolytopeNorm load_norm(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"norm"});
  PolytopeNorm n = PolytopeNorm::l1(1);
  if (has(d, "preset")) {
    const Document pd = child(d, "preset");
    const std::size_t dim = num(child(d, "dim"));
    if (dim == 0) schema(child(d, "dim"), "dimension must be positive");
    const std::string p = str(pd);
    if (p == "l1") n = PolytopeNorm::l1(dim);
    else if (p == "linf") n = PolytopeNorm::linf(dim);
    else schema(pd, "unknown preset '" + p + "'");
  } else if (has(d, "weights")) {
    n = PolytopeNorm::weighted_l1(vector_of(child(d, "weights")));
  } else {
    VertexSet v, f;
    if (has(d, "vertices"))
      for (const auto& x : items(child(d, "vertices"))) v.push_back(vector_of(x));
    if (has(d, "dual_vertices"))
      for (const auto& x : items(child(d, "dual_vertices"))) f.push_back(vector_of(x));
    if (v.empty() && f.empty()) schema(d, "expected preset, weights, vertices or dual_vertices");
    if (!v.empty() && !f.empty()) n = PolytopeNorm::from_pair(v, f);
    else if (!v.empty()) n = PolytopeNorm::from_vertices(v);
    else n = PolytopeNorm::from_dual_vertices(f);
  }
  if (has(d, "scale")) n = PolytopeNorm::scaled(n, rational(child(d, "scale")));
  return n;
}

TensorElement load_tensor(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"tensor"});
  TensorElement u{dims_of(child(d, "dims")), vector_of(child(d, "coeffs"))};
  std::size_t n = 1;
  for (auto k : u.dims) n *= k;
  if (u.dims.empty() || n != u.coeffs.size())
    schema(child(d, "coeffs"), "expected " + std::to_string(n) + " coefficients for the given dims");
  return u;
}

PolyLinearMap load_polymap(const Document& ref) {
  const Document d = resolve(ref);
  expect_kind(d, {"polymap"});
  if (has(d, "preset")) {
    const Document pd = child(d, "preset");
    const auto dims = dims_of(child(d, "dims"));
    const std::string p = str(pd);
    if (dims.empty()) schema(child(d, "dims"), "expected at least one dimension");
    if (p == "m") return universal_map_tensors(dims).m;
    if (p == "w") return universal_map_tensors(dims).w;
    if (p == "cup") return cup_map(dims[0]);
    if (p == "cap") return cap_map(dims[0]);
    if (p == "identity") return PolyLinearMap::identity(dims[0]);
    schema(pd, "unknown preset '" + p + "'");
  }
  PolyLinearMap f{dims_of(child(d, "inputs")), dims_of(child(d, "outputs")), vector_of(child(d, "coeffs"))};
  std::size_t n = 1;
  for (auto k : f.axes()) n *= k;
  if (n != f.coeffs.size()) schema(child(d, "coeffs"), "expected " + std::to_string(n) + " coefficients");
  return f;
}

json write_json(const FinPolycategory& p) {
  json j;
  if (const auto* m = p.as_monoid()) {
    j["kind"] = "monoid-polycat";
    j["name"] = m->name();
    j["elements"] = m->elements();
    j["unit"] = m->elements()[m->unit()];
    json rows = json::array();
    for (std::size_t a = 0; a < m->elements().size(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < m->elements().size(); ++b) row.push_back(m->elements()[m->mult(a, b)]);
      rows.push_back(row);
    }
    j["mult"] = rows;
    j["bound"] = m->arity_bound();
    return j;
  }
  std::shared_ptr<TablePolycategory> owned;
  const auto* t = dynamic_cast<const TablePolycategory*>(&p);
  if (!t) {
    owned = materialize(p);
    t = owned.get();
  }
  j["kind"] = "table-polycat";
  j["name"] = t->name();
  json objs = json::array();
  for (const auto& o : t->objects()) objs.push_back(o.name);
  j["objects"] = objs;
  j["bound"] = t->arity_bound();
  json maps = json::array();
  for (const auto& m : t->polymaps()) maps.push_back(to_string(m));
  j["polymaps"] = maps;
  json ids = json::object();
  for (const auto& [o, m] : t->identities()) ids[o.name] = m.id;
  j["identities"] = ids;
  json comp = json::array();
  for (const auto& e : t->entries())
    comp.push_back(json::array({to_string(e.request.f), e.request.i, to_string(e.request.g), e.request.j, to_string(e.result)}));
  j["compose"] = comp;
  return j;
}

json write_json(const FinCategory& c) {
  json j;
  j["kind"] = "fincat";
  j["name"] = c.name();
  json objs = json::array();
  for (const auto& o : c.objects()) objs.push_back(o.name);
  j["objects"] = objs;
  json ms = json::array();
  for (const auto& m : c.morphisms())
    ms.push_back(json::array({m.id, c.objects()[m.source].name, c.objects()[m.target].name}));
  j["morphisms"] = ms;
  json ids = json::object();
  for (std::size_t k = 0; k < c.object_count(); ++k) ids[c.objects()[k].name] = c.morphism(c.identity(k)).id;
  j["identities"] = ids;
  json comp = json::array();
  for (const auto& [gf, h] : c.table()) {
    if (c.is_identity(gf.first) || c.is_identity(gf.second)) continue;
    comp.push_back(json::array({c.morphism(gf.first).id, c.morphism(gf.second).id, c.morphism(h).id}));
  }
  j["compose"] = comp;
  return j;
}

json write_json(const FinDistributor& d) {
  json j;
  j["kind"] = "distributor";
  j["name"] = d.name();
  json ins = json::array(), outs = json::array();
  for (const auto& c : d.inputs()) ins.push_back(write_json(*c));
  for (const auto& c : d.outputs()) outs.push_back(write_json(*c));
  j["inputs"] = ins;
  j["outputs"] = outs;
  const json body = distributor_body_json(d);
  for (auto& [k, v] : body.items())
    if (k != "name") j[k] = v;
  return j;
}

json write_json(const LaxNormalFunctor& f, const json& base_ref) {
  json j;
  j["kind"] = "laxfunctor";
  j["name"] = f.name;
  j["base"] = base_ref;
  json fibres = json::object();
  for (const auto& [a, c] : f.fibres) fibres[a.name] = write_json(*c);
  j["fibres"] = fibres;
  json dists = json::array();
  for (const auto& [m, d] : f.dists) {
    json e;
    e["polymap"] = to_string(m);
    const json body = distributor_body_json(*d);
    for (auto& [k, v] : body.items()) e[k] = v;
    dists.push_back(e);
  }
  j["distributors"] = dists;
  json norm = json::object();
  for (const auto& [a, n] : f.normality) {
    const Scope s(*f.base);
    const auto& d = *f.dists.at(s.at(s.identity(a)));
    json rows = json::array();
    for (std::size_t x = 0; x < n.size(); ++x) rows.push_back(json::array({element_json(d, x), f.fibres.at(a)->morphism(n[x]).id}));
    norm[a.name] = rows;
  }
  j["normality"] = norm;
  json mu = json::array();
  const Scope s(*f.base);
  for (const auto& [k, t] : f.mu) {
    json e;
    e["f"] = to_string(k.f);
    e["i"] = k.i;
    e["g"] = to_string(k.g);
    e["j"] = k.j;
    const auto& p = *f.dists.at(k.f);
    const auto& q = *f.dists.at(k.g);
    const auto& r = *f.dists.at(s.at(*s.compose(s.index(k.f), k.i, s.index(k.g), k.j)));
    json rows = json::array();
    for (const auto& [xy, z] : t) rows.push_back(json::array({element_json(p, xy.first), element_json(q, xy.second), element_json(r, z)}));
    e["table"] = rows;
    mu.push_back(e);
  }
  j["mu"] = mu;
  return j;
}

json write_json(const PolytopeNorm& n) {
  json j;
  j["kind"] = "norm";
  json vs = json::array(), fs = json::array();
  for (const auto& v : n.vertices()) vs.push_back(vector_json(v));
  for (const auto& f : n.dual_vertices()) fs.push_back(vector_json(f));
  j["vertices"] = vs;
  j["dual_vertices"] = fs;
  return j;
}

json write_json(const TensorElement& u) {
  json j;
  j["kind"] = "tensor";
  j["dims"] = u.dims;
  j["coeffs"] = vector_json(u.coeffs);
  return j;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const trees::PolySignature& sig, const std::string& text) : sig_(sig), s_(text) {}

  trees::TreePolymap parse() {
    auto t = expr();
    skip();
    if (p_ != s_.size()) error("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::SyntaxError, "column " + std::to_string(p_ + 1) + ": " + msg);
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  void expect(char c) {
    skip();
    if (p_ >= s_.size() || s_[p_] != c) error(std::string("expected '") + c + "'");
    ++p_;
  }
  std::string word() {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_' || s_[p_] == '\'' || s_[p_] == '*'))
      ++p_;
    if (b == p_) error("expected a name");
    return s_.substr(b, p_ - b);
  }
  std::size_t number() {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (b == p_) error("expected an index");
    return std::stoul(s_.substr(b, p_ - b));
  }
  trees::TreePolymap expr() {
    const std::string head = word();
    if (head == "id") {
      expect('[');
      std::string a = word();
      expect(']');
      return trees::identity_tree(sig_, ObjectId(a));
    }
    if (head == "op") {
      expect('[');
      std::string n = word();
      expect(']');
      return trees::generator_tree(sig_, n);
    }
    if (head == "graft") {
      expect('(');
      auto e1 = expr();
      expect(',');
      auto i = number();
      expect(',');
      auto e2 = expr();
      expect(',');
      auto j = number();
      expect(')');
      return trees::graft(e1, i, e2, j);
    }
    error("unknown constructor '" + head + "'");
  }

  const trees::PolySignature& sig_;
  std::string s_;
  std::size_t p_ = 0;
};

}  // namespace

trees::TreePolymap parse_expression(const trees::PolySignature& sig, const std::string& text) {
  return ExpressionParser(sig, text).parse();
}

}  // namespace polycat::cli
