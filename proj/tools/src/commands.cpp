#include "polycat_cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "polycat/axioms.hpp"
#include "polycat/corpus.hpp"
#include "polycat/elements.hpp"
#include "polycat/error.hpp"
#include "polycat/fibration.hpp"
#include "polycat/frobenius.hpp"
#include "polycat/universal.hpp"
#include "polycat_cli/formats.hpp"

namespace polycat::cli {
namespace {

struct Report {
  std::vector<std::string> lines;
  bool holds = true;

  void add(const std::string& l) { lines.push_back(l); }
  void add_all(const std::vector<std::string>& ls, const std::string& indent = "") {
    for (const auto& l : ls) lines.push_back(indent + l);
  }
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string bound_line(std::size_t bound, bool relative) {
  return "bound: " + std::to_string(bound) + (relative ? " (bound-relative)" : "");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<PolytopeNorm> norms_of(const std::vector<std::string>& files) {
  std::vector<PolytopeNorm> out;
  for (const auto& f : files) out.push_back(load_norm(open_document(f)));
  return out;
}

// Tensors of higher order are read in their flattened coordinates.
Vector vector_file(const std::string& path) { return load_tensor(open_document(path)).coeffs; }

struct ElementsInput {
  std::optional<LaxNormalFunctor> functor;
  std::optional<PolyFunctor> projection;  // when the input is a functor file
};

ElementsInput elements_input(const std::string& path, std::uint64_t seed, bool representable, Report& r) {
  ElementsInput in;
  if (path == "random") {
    auto c = random_graded_case(seed, representable);
    r.add("random case: " + c.description);
    in.projection.emplace(*c.projection);
    in.functor.emplace(std::move(c.functor));
    return in;
  }
  Document d = open_document(path);
  const std::string kind = kind_of(d);
  if (kind == "laxfunctor") {
    in.functor.emplace(load_laxfunctor(d));
  } else if (kind == "functor") {
    in.projection.emplace(load_functor(d));
    in.functor.emplace(fibres_functor(*in.projection));
  } else {
    fail(ErrorCode::SchemaError, path + ":/kind: expected kind laxfunctor or functor, got '" + kind + "'");
  }
  return in;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"polycat: finite polycategories, fibrations, tensor norms and elements", "polycat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  Report report;
  std::function<void()> action;
  std::uint64_t seed = default_seed;

  std::string file, file2, text, boundary, pos, object, candidate, scale, at, inputs_csv, outputs_csv, signature;
  std::size_t max_nodes = 4, bound = 0, max_results = 1024;
  bool representable = false;
  std::vector<std::string> files;

  auto seed_option = [&](CLI::App* c) {
    c->add_option("--seed", seed, "Seed for the random case (default 1)");
    c->add_flag("--representable", representable, "Make the random case representable everywhere");
  };

  auto* check = app.add_subcommand("check", "Law and functor checks");
  check->require_subcommand(1);
  auto* check_polycat = check->add_subcommand("polycat", "Check the five laws");
  check_polycat->add_option("F", file, "Polycategory file")->required();
  check_polycat->callback([&] {
    action = [&] {
      auto p = load_polycat(open_document(file));
      auto r = check_axioms(*p);
      report.add("presentation: " + r.presentation);
      report.add(bound_line(r.bound, r.bound_relative));
      report.add_all(r.lines());
      report.holds = r.passed();
    };
  });
  auto* check_functor_cmd = check->add_subcommand("functor", "Check functoriality");
  check_functor_cmd->add_option("F", file, "Functor file")->required();
  check_functor_cmd->callback([&] {
    action = [&] {
      auto f = load_functor(open_document(file));
      auto r = check_functor(f);
      report.add_all(r.lines());
      report.holds = r.passed();
    };
  });

  auto* free = app.add_subcommand("free", "Free polycategory over a signature");
  free->require_subcommand(1);
  auto* free_compose = free->add_subcommand("compose", "Build and validate a tree expression");
  free_compose->add_option("SIG", file, "Signature file")->required();
  free_compose->add_option("EXPR", text, "Expression")->required();
  free_compose->callback([&] {
    action = [&] {
      auto sig = load_signature(open_document(file));
      auto t = parse_expression(sig, text);
      trees::validate(sig, t);
      report.add("boundary: " + to_string(t.boundary));
      report.add("nodes: " + std::to_string(t.nodes.size()));
      report.add("encoding: " + trees::canonical_encoding(t).text);
    };
  });
  auto* free_enum = free->add_subcommand("enum", "Enumerate trees with a boundary");
  free_enum->add_option("SIG", file, "Signature file")->required();
  free_enum->add_option("--boundary", boundary, "Boundary, e.g. A,B->B")->required();
  free_enum->add_option("--max-nodes", max_nodes, "Node limit (default 4)");
  free_enum->callback([&] {
    action = [&] {
      auto sig = load_signature(open_document(file));
      auto b = parse_boundary(boundary);
      auto ts = trees::enumerate(sig, b, max_nodes);
      report.add("boundary: " + to_string(b));
      report.add("max nodes: " + std::to_string(max_nodes));
      report.add("trees: " + std::to_string(ts.size()));
      for (const auto& t : ts) report.add("tree " + trees::canonical_encoding(t).text);
      if (ts.empty()) report.add("witness: no tree with boundary " + to_string(b) + " within " + std::to_string(max_nodes) + " nodes");
      report.holds = !ts.empty();
    };
  });

  auto* universal = app.add_subcommand("universal", "Universality certificate of one polymap");
  universal->add_option("F", file, "Polycategory file")->required();
  universal->add_option("--map", text, "Polymap, e.g. f:A,B->C")->required();
  universal->add_option("--pos", pos, "Position out:i or in:j")->required();
  universal->callback([&] {
    action = [&] {
      auto p = load_polycat(open_document(file));
      Scope s(*p);
      auto m = parse_polymap(text);
      auto k = s.find(m);
      if (!k) fail(ErrorCode::UnknownPolymap, to_string(m) + " is not a polymap within the bound");
      auto c = is_universal(s, *k, parse_position(pos));
      report.add_all(c.lines());
      report.holds = c.universal();
    };
  });

  auto* birep = app.add_subcommand("birep", "Decide birepresentability");
  birep->add_option("F", file, "Polycategory file")->required();
  birep->callback([&] {
    action = [&] {
      auto p = load_polycat(open_document(file));
      auto d = decide_birepresentable(*p);
      report.add(bound_line(d.bound, d.bound_relative));
      report.add("by universal objects: " + yes(d.by_universal_objects));
      report.add("by connectives: " + yes(d.by_connectives));
      report.add_all(d.evidence);
      if (!d.agree()) report.add("the two decisions disagree");
      report.holds = d.birepresentable() && d.agree();
    };
  });

  auto print_fib = [&](const std::string& label, const FibrationDecision& d) {
    report.add(label + ": " + yes(d.holds) + " (" + std::to_string(d.checked) + " checked, bound " + std::to_string(d.bound) + ")");
    report.add_all(d.evidence, "  ");
    if (d.missing) report.add("  missing lift: " + to_string(d.missing->first) + " " + to_string(d.missing->second));
  };
  auto* bifib = app.add_subcommand("bifib", "Decide whether a functor is a bifibration");
  bifib->add_option("F", file, "Functor file")->required();
  bifib->callback([&] {
    action = [&] {
      auto f = load_functor(open_document(file));
      auto d = decide_bifibration(f);
      print_fib("pull fibration", d.pull);
      print_fib("push fibration", d.push);
      report.holds = d.holds();
    };
  });

  auto* cross = app.add_subcommand("crosscheck", "Cross-checks between independent decisions");
  cross->require_subcommand(1);
  auto* birep_bifib = cross->add_subcommand("birep-bifib", "Birepresentable iff the map to terminal is a bifibration");
  birep_bifib->add_option("F", file, "Polycategory file")->required();
  birep_bifib->callback([&] {
    action = [&] {
      auto p = load_polycat(open_document(file));
      auto r = birep_bifib_crosscheck(p);
      report.add(bound_line(r.birep.bound, r.birep.bound_relative));
      report.add("birepresentable: " + yes(r.birep.birepresentable()));
      report.add("bifibration over terminal: " + yes(r.bifib.holds()));
      print_fib("pull fibration", r.bifib.pull);
      print_fib("push fibration", r.bifib.push);
      report.add("agree: " + yes(r.agree()));
      report.holds = r.agree();
    };
  });

  auto* frob = app.add_subcommand("frobenius", "Frobenius monoids on an object");
  frob->add_option("F", file, "Polycategory file")->required();
  frob->add_option("--object", object, "Object")->required();
  frob->add_option("--bound", bound, "Shape bound (default: the polycategory's)");
  frob->add_option("--max", max_results, "Result cap (default 1024)");
  frob->callback([&] {
    action = [&] {
      auto p = load_polycat(open_document(file));
      auto r = frobenius_monoids(p, ObjectId(object), bound ? bound : p->arity_bound(), max_results);
      report.add(bound_line(r.bound, r.bound_relative));
      report.add("monoids: " + std::to_string(r.monoids.size()) + (r.truncated ? " (truncated)" : ""));
      for (std::size_t k = 0; k < r.monoids.size(); ++k) {
        report.add("monoid " + std::to_string(k));
        report.add_all(r.monoids[k].lines(), "  ");
      }
      report.holds = !r.monoids.empty();
    };
  });

  auto* norm = app.add_subcommand("norm", "Exact polytope and tensor norms");
  norm->require_subcommand(1);
  auto* gauge_cmd = norm->add_subcommand("gauge", "Gauge of a vector");
  gauge_cmd->add_option("N", file, "Norm file")->required();
  gauge_cmd->add_option("V", file2, "Vector (order-1 tensor) file")->required();
  gauge_cmd->callback([&] {
    action = [&] {
      auto n = load_norm(open_document(file));
      report.add(to_string(gauge(n.vertices(), vector_file(file2))));
    };
  });
  auto* dual_cmd = norm->add_subcommand("dual", "Dual norm of a covector");
  dual_cmd->add_option("N", file, "Norm file")->required();
  dual_cmd->add_option("V", file2, "Covector (order-1 tensor) file")->required();
  dual_cmd->callback([&] {
    action = [&] {
      auto n = load_norm(open_document(file));
      report.add(to_string(n.dual_norm(vector_file(file2))));
    };
  });
  auto* proj_cmd = norm->add_subcommand("proj", "Projective tensor norm");
  proj_cmd->add_option("U", file, "Tensor file")->required();
  proj_cmd->add_option("N", files, "One norm file per factor")->required();
  proj_cmd->callback([&] {
    action = [&] { report.add(to_string(projective_norm(load_tensor(open_document(file)), norms_of(files)))); };
  });
  auto* inj_cmd = norm->add_subcommand("inj", "Injective tensor norm");
  inj_cmd->add_option("U", file, "Tensor file")->required();
  inj_cmd->add_option("N", files, "One norm file per factor")->required();
  inj_cmd->callback([&] {
    action = [&] { report.add(to_string(injective_norm(load_tensor(open_document(file)), norms_of(files)))); };
  });
  auto slot_options = [&](CLI::App* c) {
    c->add_option("MAP", file, "Polylinear map file")->required();
    c->add_option("--pos", pos, "Slot, in:j or out:i")->required();
    c->add_option("--inputs", inputs_csv, "Comma-separated norm files");
    c->add_option("--outputs", outputs_csv, "Comma-separated norm files");
    c->add_option("--at", at, "Vector file to evaluate at");
  };
  auto* pull_cmd = norm->add_subcommand("pull", "Pullback norm at an input");
  slot_options(pull_cmd);
  pull_cmd->callback([&] {
    action = [&] {
      auto g = load_polymap(open_document(file));
      auto p = parse_position(pos);
      if (p.side != Side::In) fail(ErrorCode::IndexOutOfRange, "pullback needs an input slot");
      auto n = pullback_norm(g, p.index, norms_of(split_list(inputs_csv)), norms_of(split_list(outputs_csv)));
      report.add("dim " + std::to_string(n.dim));
      report.add("seminorm: " + yes(n.seminorm));
      for (const auto& c : n.covectors) report.add("covector " + to_string(c));
      if (n.polytope) report.add_all(n.polytope->lines(), "  ");
      if (!at.empty()) report.add("value: " + to_string(n.value(vector_file(at))));
    };
  });
  auto* push_cmd = norm->add_subcommand("push", "Pushforward norm at an output");
  slot_options(push_cmd);
  push_cmd->callback([&] {
    action = [&] {
      auto f = load_polymap(open_document(file));
      auto p = parse_position(pos);
      if (p.side != Side::Out) fail(ErrorCode::IndexOutOfRange, "pushforward needs an output slot");
      auto n = pushforward_norm(f, p.index, norms_of(split_list(inputs_csv)), norms_of(split_list(outputs_csv)));
      report.add("dim " + std::to_string(n.dim));
      report.add("extended: " + yes(n.extended));
      for (const auto& v : n.vertices) report.add("vertex " + to_string(v));
      for (const auto& b : n.image) report.add("image " + to_string(b));
      if (n.polytope) report.add_all(n.polytope->lines(), "  ");
      if (!at.empty()) report.add("value: " + to_string(n.value(vector_file(at))));
    };
  });
  auto* ncross = norm->add_subcommand("crosscheck", "Crossnorm iff m and w are contractive");
  ncross->add_option("--candidate", candidate, "projective, injective, or a norm file on the tensor space")->required();
  ncross->add_option("--scale", scale, "Multiply the candidate by this rational");
  ncross->add_option("N", files, "One norm file per factor")->required();
  ncross->callback([&] {
    action = [&] {
      auto factors = norms_of(files);
      PolytopeNorm c = candidate == "projective"   ? projective_polytope(factors)
                       : candidate == "injective" ? injective_polytope(factors)
                                                  : load_norm(open_document(candidate));
      if (!scale.empty()) c = PolytopeNorm::scaled(c, parse_rational(scale));
      auto e = crossnorm_contractive_equivalence(c, factors);
      report.add_all(e.lines());
      report.holds = e.agree();
    };
  });

  auto* elements = app.add_subcommand("elements", "Polycategory of elements and the fibres functor");
  elements->require_subcommand(1);
  auto elements_cmd = [&](const std::string& name, const std::string& help, std::function<void(ElementsInput&)> body) {
    auto* c = elements->add_subcommand(name, help);
    c->add_option("F", file, "laxfunctor or functor file, or 'random'")->required();
    seed_option(c);
    c->callback([&, body] {
      action = [&, body] {
        auto in = elements_input(file, seed, representable, report);
        body(in);
      };
    });
  };
  elements_cmd("build", "Build the polycategory of elements", [&](ElementsInput& in) {
    auto el = build_elements(*in.functor);
    report.add("total: " + el.total->name());
    report.add("objects: " + std::to_string(el.total->objects().size()));
    report.add("polymaps: " + std::to_string(el.total->polymaps().size()));
    report.add(bound_line(el.axioms.bound, el.axioms.bound_relative));
    report.add_all(el.axioms.lines());
    report.add_all(el.functor.lines());
  });
  elements_cmd("roundtrip", "Verify the round trip through the fibres functor", [&](ElementsInput& in) {
    auto r = in.projection ? roundtrip_check(*in.projection) : roundtrip_check(*in.functor);
    report.add("subject: " + r.subject);
    report.add_all(r.lines());
    report.holds = r.passed();
  });
  elements_cmd("mvar", "Representability in every variable", [&](ElementsInput& in) {
    auto r = mvar_check(*in.functor);
    report.add_all(r.lines());
    report.holds = r.holds();
  });
  elements_cmd("grothendieck", "Multivariable adjunctions iff bifibration", [&](ElementsInput& in) {
    auto r = grothendieck_crosscheck(*in.functor);
    report.add_all(r.lines());
    report.holds = r.agree();
  });

  auto* exp = app.add_subcommand("export", "Export");
  exp->require_subcommand(1);
  auto* dot = exp->add_subcommand("dot", "DOT graph of a tree expression");
  dot->add_option("TREE", text, "Tree expression")->required();
  dot->add_option("--signature", signature, "Signature file")->required();
  dot->callback([&] {
    action = [&] {
      auto sig = load_signature(open_document(signature));
      auto t = parse_expression(sig, text);
      trees::validate(sig, t);
      report.add(trees::to_dot(t));
    };
  });

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    const auto subs = app.get_subcommands([&](CLI::App* c) { return c->get_name() == args[0]; });
    if (subs.empty()) {
      err << "error: UnknownCommand: unknown command '" << args[0] << "'\n";
      return InputError;
    }
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Holds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Holds;
  } catch (const CLI::ParseError& e) {
    err << "error: UnknownCommand: " << e.what() << "\n";
    return InputError;
  }
  try {
    if (!action) fail(ErrorCode::UnknownCommand, "no command given");
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }
  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
  out << "command: " << echo << "\n";
  out << "verdict: " << (report.holds ? "holds" : "fails") << "\n";
  for (const auto& l : report.lines) out << l << "\n";
  return report.holds ? Holds : Fails;
}

}  // namespace polycat::cli
