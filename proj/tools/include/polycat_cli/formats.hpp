#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "polycat/elements.hpp"
#include "polycat/fincat.hpp"
#include "polycat/free.hpp"
#include "polycat/functor.hpp"
#include "polycat/lax_functor.hpp"
#include "polycat/polycategory.hpp"
#include "polycat/polytope.hpp"
#include "polycat/tensor_norms.hpp"

namespace polycat::cli {

using json = nlohmann::ordered_json;

// The bound used when a file does not give one: POLYCAT_ARITY_BOUND, else 4.
std::size_t default_bound();

// SyntaxError carries line and column.
json parse_json_text(const std::string& text, const std::string& source);
json read_json_file(const std::filesystem::path& path);

// A parsed document and the directory its relative references resolve against.
struct Document {
  json value;
  std::filesystem::path dir;
  std::string path;  // JSON pointer of value inside its file, for SchemaError
};

Document open_document(const std::filesystem::path& path);
std::string kind_of(const Document& d);

// Loaders run every construction-time check. A reference is either an inline
// object or a string naming a file relative to the referring document.
PolycatPtr load_polycat(const Document& d);
PolyFunctor load_functor(const Document& d);
CatPtr load_fincat(const Document& d);
DistPtr load_distributor(const Document& d);
LaxNormalFunctor load_laxfunctor(const Document& d);
trees::PolySignature load_signature(const Document& d);
PolytopeNorm load_norm(const Document& d);
TensorElement load_tensor(const Document& d);
PolyLinearMap load_polymap(const Document& d);

// Writers produce documents the loaders accept.
json write_json(const FinPolycategory& p);  // table-polycat, or monoid-polycat for a monoid presentation
json write_json(const FinCategory& c);
json write_json(const FinDistributor& d);
json write_json(const LaxNormalFunctor& f, const json& base_ref);
json write_json(const PolytopeNorm& n);
json write_json(const TensorElement& u);

// Free expressions: id[A], op[name], graft(e1, i, e2, j).
trees::TreePolymap parse_expression(const trees::PolySignature& sig, const std::string& text);

}  // namespace polycat::cli
