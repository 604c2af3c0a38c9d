#include "cli.hpp"

#include <polyadj/adjunction.hpp>
#include <polyadj/cayley.hpp>
#include <polyadj/classify.hpp>
#include <polyadj/ehrhart.hpp>
#include <polyadj/error.hpp>
#include <polyadj/io.hpp>
#include <polyadj/toricdict.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace polyadj::cli {

extern const std::string_view kSchemaBundle;

namespace {

using io::Json;

struct Failure {
  int code;
  std::string message;
};

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Failure{kMalformed, "cannot read " + path};
    buf << in.rdbuf();
  }
  return io::parse(buf.str());
}

Json null_or(const std::optional<Rational>& q) { return q ? io::to_json(*q) : Json(nullptr); }

Json analyze(const Polytope& p, bool classify_it, bool ehrhart, const Options& options) {
  if (!p.full_dimensional())
    throw Failure{kUnsupported, "analysis needs a full-dimensional polytope (dimension " + std::to_string(p.dim()) + ")"};
  const bool simple = is_simple(p);
  if (!simple) throw Failure{kUnsupported, "the polytope is not simple, so lambda and the nef value are undefined"};
  const auto adj = adjunction_report(p);
  Json r;
  r["ambient_dim"] = p.ambient_dim();
  r["dim"] = p.dim();
  r["vertex_count"] = p.vertices().size();
  r["facet_count"] = p.facets().size();
  r["smooth"] = is_smooth(p);
  r["simple"] = simple;
  r["lattice"] = p.is_lattice();
  r["sigma"] = io::to_json(adj.sigma);
  r["lambda"] = io::to_json(adj.lambda);
  r["q_codegree"] = io::to_json(adj.q_codegree);
  r["nef_value"] = null_or(adj.nef_value);
  r["q_normal"] = adj.q_normal;
  r["degree"] = nullptr;
  r["codegree"] = nullptr;
  r["h_star"] = nullptr;
  if (ehrhart && p.is_lattice()) {
    auto deg = degree_and_codegree(p, EhrhartOptions{options.threads});
    r["degree"] = deg.degree;
    r["codegree"] = deg.codegree;
    Json h = Json::array();
    for (const auto& c : deg.hstar.coefficients) h.push_back(io::to_json(c));
    r["h_star"] = h;
  }
  r["classification"] = nullptr;
  if (classify_it) {
    if (!p.is_lattice()) throw Failure{kUnsupported, "classification needs a lattice polytope"};
    r["classification"] = io::to_json(classify(p));
  }
  return r;
}

Json recognition(const std::optional<CayleyStructure>& c, std::optional<long> s, std::optional<std::size_t> k) {
  Json r;
  r["result"] = c ? "Found" : "NotFound";
  r["s"] = s ? Json(*s) : Json(nullptr);
  r["k"] = k ? Json(*k) : Json(nullptr);
  r["cayley"] = c ? io::to_json(c->spec) : Json(nullptr);
  r["map"] = c ? io::to_json(c->map) : Json(nullptr);
  r["facets"] = c ? Json(c->facets) : Json(nullptr);
  return r;
}

Json recognize(const Polytope& p, std::optional<long> s, std::optional<std::size_t> k) {
  if (!p.full_dimensional()) throw Failure{kUnsupported, "recognition needs a full-dimensional polytope"};
  const std::size_t n = p.ambient_dim();
  if (s && *s < 1) throw Failure{kMalformed, "--s must be positive"};
  if (k && (*k < 1 || *k >= n)) throw Failure{kMalformed, "--k must lie in 1.." + std::to_string(n - 1)};
  if (s && k) return recognition(recognize_cayley(p, *s, *k), s, k);
  // The base simplex s * Delta_k is a lattice image of P, so s is at most
  // the largest coordinate spread of the vertices.
  long s_max = 1;
  if (s) {
    s_max = *s;
  } else {
    for (std::size_t c = 0; c < n; ++c) {
      auto [lo, hi] = std::minmax_element(p.vertices().begin(), p.vertices().end(),
                                          [&](const RatVector& a, const RatVector& b) { return a[c] < b[c]; });
      s_max = std::max(s_max, Rational((*hi)[c] - (*lo)[c]).get_num().get_si());
    }
  }
  for (long si = s ? *s : 1; si <= s_max; ++si)
    for (std::size_t ki = k ? *k : 1; ki <= (k ? *k : n - 1); ++ki)
      if (auto c = recognize_cayley(p, si, ki)) return recognition(c, si, ki);
  return recognition(std::nullopt, s, k);
}

Json cayley_analysis(const CayleySpec& spec) {
  if (!is_strict(spec)) throw Failure{kNotStrict, "closed forms need a strict Cayley polytope (factors with one normal fan)"};
  const auto a = closed_form_invariants(spec);
  const Polytope p = cayley_construct(spec);
  Json r;
  r["strict"] = a.strict;
  r["smooth"] = a.smooth;
  r["case"] = std::string(to_string(a.case_tag));
  r["q_codegree"] = null_or(a.q_codegree);
  r["nef_value"] = null_or(a.nef_value);
  Json d = Json::array();
  for (const auto& x : a.degrees) d.push_back(io::to_json(x));
  r["degrees"] = d;
  const Rational lp_codeg = 1 / sigma(p);
  Json lp{{"q_codegree", io::to_json(lp_codeg)}, {"nef_value", nullptr}, {"q_normal", nullptr}};
  std::optional<AdjunctionReport> adj;
  if (is_simple(p)) {
    adj = adjunction_report(p);
    lp["nef_value"] = null_or(adj->nef_value);
    lp["q_normal"] = adj->q_normal;
  }
  r["lp"] = lp;
  if (a.case_tag == CayleyCase::HypothesisFails) {
    r["consistent"] = nullptr;
  } else {
    r["consistent"] = adj && *a.q_codegree == lp_codeg && adj->nef_value == a.nef_value &&
                      adj->q_normal == (a.case_tag != CayleyCase::Case2b);
  }
  return r;
}

Json equivalence(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Failure{kDimensionMismatch, "the polytopes live in different dimensions"};
  auto map = unimodular_equivalent(a, b);
  return Json{{"result", map ? "Equivalent" : "NotEquivalent"}, {"map", map ? io::to_json(*map) : Json(nullptr)}};
}

Json fan_command(const std::string& what, const FanDivisor& d) {
  if (what == "polytope") return io::to_json(polytope_from_divisor(d));
  bool value = false;
  if (what == "ample") value = is_ample(d);
  else if (what == "nef") value = is_nef(d);
  else if (what == "big") value = is_big(d);
  else value = is_effective(d);
  return Json{{"property", what}, {"value", value}};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::ZeroVector:
    case ErrorKind::EmptyInput:
    case ErrorKind::NegativeParameter:
      return kMalformed;
    case ErrorKind::NotFullDimensional:
    case ErrorKind::NotLattice:
    case ErrorKind::NotSimple:
    case ErrorKind::NonSimplicial:
    case ErrorKind::UnboundedPolyhedron:
    case ErrorKind::SingularSystem:
      return kUnsupported;
    case ErrorKind::NotStrict:
      return kNotStrict;
    case ErrorKind::DimensionMismatch:
      return kDimensionMismatch;
    case ErrorKind::IncompleteFan:
      return kIncompleteFan;
    case ErrorKind::InternalInconsistency:
      return kInternal;
  }
  return kInternal;
}

}  // namespace

std::string schema(const std::string& name) {
  Json bundle = Json::parse(kSchemaBundle);
  if (name.empty()) return io::dump(bundle);
  if (!bundle["$defs"].contains(name)) return "";
  Json one;
  one["$schema"] = bundle["$schema"];
  one["$ref"] = "#/$defs/" + name;
  one["$defs"] = bundle["$defs"];
  return io::dump(one);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
  CLI::App app{"Adjunction invariants of lattice polytopes", "polyadj"};
  app.require_subcommand(0, 1);

  std::optional<std::string> schema_name;
  app.add_option("--json-schema", schema_name, "Print the JSON schema bundle, or one document schema by name")
      ->expected(0, 1)
      ->default_str("");
  bool schema_flag = false;

  std::string file, file_b, fan_what, cayley_what;
  bool do_classify = false, no_ehrhart = false;
  std::optional<long> opt_s;
  std::optional<std::size_t> opt_k;

  auto* analyze_cmd = app.add_subcommand("analyze", "Report invariants of a polytope.v1 document");
  analyze_cmd->add_option("file", file, "Input file, or - for standard input")->required();
  analyze_cmd->add_flag("--classify", do_classify, "Add the classification verdict");
  analyze_cmd->add_flag("--no-ehrhart", no_ehrhart, "Skip lattice point counting");

  auto* cayley_cmd = app.add_subcommand("cayley", "Build, recognize or analyze Cayley polytopes");
  cayley_cmd->add_option("action", cayley_what, "build | recognize | analyze")
      ->required()
      ->check(CLI::IsMember({"build", "recognize", "analyze"}));
  cayley_cmd->add_option("file", file, "cayley.v1 input (polytope.v1 for recognize)")->required();
  cayley_cmd->add_option("--s", opt_s, "Cayley order to search for");
  cayley_cmd->add_option("--k", opt_k, "Base simplex dimension to search for");

  auto* equiv_cmd = app.add_subcommand("equiv", "Affine unimodular equivalence of two polytopes");
  equiv_cmd->add_option("first", file, "First polytope.v1 file")->required();
  equiv_cmd->add_option("second", file_b, "Second polytope.v1 file")->required();

  auto* fan_cmd = app.add_subcommand("fan", "Toric dictionary for a fan.v1 divisor");
  fan_cmd->add_option("action", fan_what, "polytope | ample | nef | big | effective")
      ->required()
      ->check(CLI::IsMember({"polytope", "ample", "nef", "big", "effective"}));
  fan_cmd->add_option("file", file, "fan.v1 input with coefficients")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    schema_flag = app.count("--json-schema") > 0;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kMalformed;
  }

  try {
    Json result;
    if (schema_flag) {
      std::string text = schema(schema_name.value_or(""));
      if (text.empty()) throw Failure{kMalformed, "unknown schema name " + *schema_name};
      out << text;
      return kOk;
    }
    if (*analyze_cmd) {
      result = analyze(io::polytope_from_json(read_json(file)), do_classify, !no_ehrhart, options);
    } else if (*cayley_cmd) {
      if (cayley_what == "recognize") {
        result = recognize(io::polytope_from_json(read_json(file)), opt_s, opt_k);
      } else {
        CayleySpec spec = io::cayley_from_json(read_json(file));
        result = cayley_what == "build" ? io::to_json(cayley_construct(spec)) : cayley_analysis(spec);
      }
    } else if (*equiv_cmd) {
      Polytope a = io::polytope_from_json(read_json(file));
      Polytope b = io::polytope_from_json(read_json(file_b));
      result = equivalence(a, b);
    } else if (*fan_cmd) {
      result = fan_command(fan_what, io::divisor_from_json(read_json(file)));
    } else {
      err << app.help();
      return kMalformed;
    }
    out << io::dump(result);
    return kOk;
  } catch (const Failure& f) {
    err << "polyadj: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "polyadj: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    err << "polyadj: malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    err << "polyadj: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace polyadj::cli
