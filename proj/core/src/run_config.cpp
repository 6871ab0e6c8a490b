#include "ilan/run_config.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ilan/error.hpp"
#include "ilan/matrix_market.hpp"
#include "ilan/problems.hpp"
#include "ilan/transforms.hpp"

namespace ilan {
namespace {

using json = nlohmann::json;

[[noreturn]] void config_fail(const std::string& what) { throw Error(ErrorCode::config_error, what); }

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) config_fail(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) config_fail(where + ": unknown key '" + key + "'");
  }
}

cplx as_complex(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  config_fail(what + " must be a number or a [re, im] pair");
}

template <class T>
T get_number(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) config_fail(std::string(key) + " must be a number");
  return j[key].get<T>();
}

ScalarFunction function_from(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    config_fail("function descriptor needs a string 'type'");
  }
  const std::string type = j["type"];
  if (type == "constant") {
    check_keys(j, {"type", "value"}, "constant function");
    return ScalarFunction::constant(j.contains("value") ? as_complex(j["value"], "value") : cplx(1.0));
  }
  if (type == "monomial") {
    check_keys(j, {"type", "degree"}, "monomial function");
    const int d = get_number<int>(j, "degree", -1);
    if (d < 0) config_fail("monomial needs a nonnegative 'degree'");
    return ScalarFunction::monomial(d);
  }
  if (type == "negated-identity") {
    check_keys(j, {"type"}, "negated-identity function");
    return ScalarFunction::negated_identity();
  }
  if (type == "exponential") {
    check_keys(j, {"type", "rate"}, "exponential function");
    if (!j.contains("rate")) config_fail("exponential needs 'rate'");
    return ScalarFunction::exponential(as_complex(j["rate"], "rate"));
  }
  if (type == "sine") {
    check_keys(j, {"type"}, "sine function");
    return ScalarFunction::sine();
  }
  if (type == "lambda-sine") {
    check_keys(j, {"type"}, "lambda-sine function");
    return ScalarFunction::lambda_sine();
  }
  if (type == "sqrt-shift") {
    check_keys(j, {"type", "a", "b"}, "sqrt-shift function");
    const cplx a = j.contains("a") ? as_complex(j["a"], "a") : cplx(1.0);
    const cplx b = j.contains("b") ? as_complex(j["b"], "b") : cplx(0.0);
    return ScalarFunction::sqrt_shift(a, b);
  }
  config_fail("unknown function type '" + type + "'");
}

ProblemKind parse_kind(const std::string& s) {
  if (s == "delay-pde") return ProblemKind::delay_pde;
  if (s == "random-dep") return ProblemKind::random_dep;
  if (s == "symmetrized-random") return ProblemKind::symmetrized_random;
  if (s == "matrix-market") return ProblemKind::matrix_market;
  config_fail("unknown problem kind '" + s + "'");
}

ProblemSpec problem_from(const json& j, const std::string& base_dir) {
  check_keys(j, {"kind", "N", "n", "seed", "terms", "shift", "scale", "target"}, "problem");
  if (!j.contains("kind") || !j["kind"].is_string()) config_fail("problem needs a string 'kind'");
  ProblemSpec p;
  p.kind = parse_kind(j["kind"]);
  p.grid = get_number<int>(j, "N", p.grid);
  p.n = get_number<Index>(j, "n", p.n);
  p.seed = get_number<std::uint64_t>(j, "seed", p.seed);
  if (j.contains("shift")) p.shift = as_complex(j["shift"], "shift");
  if (j.contains("scale")) p.scale = as_complex(j["scale"], "scale");
  if (p.scale == cplx(0.0)) config_fail("scale must be nonzero");
  if (j.contains("target")) {
    const json& t = j["target"];
    check_keys(t, {"center", "radius"}, "target");
    Disk d;
    if (t.contains("center")) d.center = as_complex(t["center"], "target.center");
    d.radius = get_number<double>(t, "radius", -1.0);
    if (!(d.radius > 0.0)) config_fail("target.radius must be positive");
    p.target = d;
  }
  switch (p.kind) {
    case ProblemKind::delay_pde:
      if (p.grid < 2) config_fail("delay-pde needs N >= 2");
      break;
    case ProblemKind::random_dep:
      if (p.n < 1) config_fail("random-dep needs n >= 1");
      break;
    case ProblemKind::symmetrized_random:
      if (p.n < 2) config_fail("symmetrized-random needs n >= 2");
      break;
    case ProblemKind::matrix_market: {
      if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty()) {
        config_fail("matrix-market problem needs a nonempty 'terms' array");
      }
      for (const json& t : j["terms"]) {
        check_keys(t, {"file", "function", "weight", "low_rank"}, "term");
        if (!t.contains("file") || !t["file"].is_string()) config_fail("term needs a string 'file'");
        if (!t.contains("function")) config_fail("term needs a 'function'");
        FileTerm ft;
        std::filesystem::path f = t["file"].get<std::string>();
        if (f.is_relative()) f = std::filesystem::path(base_dir) / f;
        ft.file = f.string();
        ft.function = function_from(t["function"]);
        if (t.contains("weight")) ft.weight = as_complex(t["weight"], "weight");
        if (t.contains("low_rank")) {
          if (!t["low_rank"].is_boolean()) config_fail("low_rank must be a boolean");
          ft.low_rank = t["low_rank"];
        }
        p.terms.push_back(std::move(ft));
      }
      break;
    }
  }
  return p;
}

}  // namespace

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::delay_pde: return "delay-pde";
    case ProblemKind::random_dep: return "random-dep";
    case ProblemKind::symmetrized_random: return "symmetrized-random";
    case ProblemKind::matrix_market: return "matrix-market";
  }
  return "unknown";
}

SolveOptions RunConfig::solve_options() const {
  SolveOptions o;
  o.maxiter = maxiter;
  o.strategy = strategy;
  o.rank = rank;
  o.tol = tol;
  o.inner_iterations = inner_iterations;
  o.extraction_every = extraction_every;
  o.method = extraction;
  o.target = problem.target;
  o.seed = seed;
  o.shift = problem.shift;
  o.scale = problem.scale;
  return o;
}

RunConfig parse_run_config(const std::string& json_text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_fail(std::string("invalid JSON: ") + e.what());
  }
  check_keys(j, {"problem", "maxiter", "strategy", "rank", "tol", "inner_iterations", "extraction_every",
                 "extraction", "seed", "output"},
             "config");
  if (!j.contains("problem")) config_fail("config needs a 'problem'");
  RunConfig c;
  c.problem = problem_from(j["problem"], base_dir);
  c.maxiter = get_number<int>(j, "maxiter", c.maxiter);
  c.rank = get_number<int>(j, "rank", c.rank);
  c.tol = get_number<double>(j, "tol", c.tol);
  c.inner_iterations = get_number<int>(j, "inner_iterations", c.inner_iterations);
  c.extraction_every = get_number<int>(j, "extraction_every", c.extraction_every);
  c.seed = get_number<std::uint64_t>(j, "seed", c.seed);
  try {
    if (j.contains("strategy")) {
      const std::string name = j["strategy"].get<std::string>();
      const auto st = parse_z_strategy(name);
      if (!st) config_fail("unknown strategy '" + name + "'");
      c.strategy = *st;
    }
    if (j.contains("extraction")) c.extraction = parse_extraction_method(j["extraction"].get<std::string>());
  } catch (const json::exception& e) {
    config_fail(std::string("strategy/extraction must be strings: ") + e.what());
  } catch (const Error& e) {
    config_fail(e.what());
  }
  if (j.contains("output")) {
    const json& o = j["output"];
    check_keys(o, {"results", "history"}, "output");
    if (o.contains("results")) c.results_path = o["results"].get<std::string>();
    if (o.contains("history")) c.history_path = o["history"].get<std::string>();
  }
  if (!(c.tol > 0.0)) config_fail("tol must be positive");
  if (c.maxiter < 1) config_fail("maxiter must be >= 1");
  if (c.inner_iterations < 1) config_fail("inner_iterations must be >= 1");
  if (c.extraction_every < 1) config_fail("extraction_every must be >= 1");
  if (c.rank < 0) config_fail("rank must be >= 0");
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_run_config(ss.str(), dir.empty() ? "." : dir.string());
}

ScalarFunction parse_function(const std::string& json_text) {
  try {
    return function_from(json::parse(json_text));
  } catch (const json::parse_error& e) {
    config_fail(std::string("invalid JSON: ") + e.what());
  }
}

MaterializedProblem materialize(const ProblemSpec& spec) {
  MaterializedProblem out;
  switch (spec.kind) {
    case ProblemKind::delay_pde:
      out.nep = gen_delay_pde(spec.grid);
      out.notes.push_back("5-point Dirichlet Laplacian, interior grid " + std::to_string(spec.grid) + "x" +
                          std::to_string(spec.grid) + ", h = pi/(N+1)");
      break;
    case ProblemKind::random_dep:
      out.nep = gen_random_dep(spec.n, spec.seed);
      out.notes.push_back("mt19937_64 seed " + std::to_string(spec.seed) + ", Box-Muller normals");
      break;
    case ProblemKind::symmetrized_random:
      out.nep = gen_symmetrized_random(spec.n);
      out.doubled = true;
      out.notes.push_back("doubled to size " + std::to_string(2 * spec.n));
      break;
    case ProblemKind::matrix_market: {
      std::vector<Term> terms;
      Index n = -1;
      for (const FileTerm& ft : spec.terms) {
        SparseMatrix A = read_matrix_market(ft.file);
        if (A.rows() != A.cols()) throw Error(ErrorCode::dimension_mismatch, ft.file + " is not square");
        if (n < 0) n = A.rows();
        if (A.rows() != n) throw Error(ErrorCode::dimension_mismatch, ft.file + " has a different size");
        if (ft.weight != cplx(1.0)) A *= ft.weight;
        Term t = make_term(ft.function, TermMatrix(std::move(A)));
        t.polynomial_degree = t.function.polynomial_degree();
        if (ft.low_rank && !t.polynomial_degree) {
          std::string note;
          t.low_rank_factor = detect_low_rank(t.matrix, 1e-12, &note);
          if (!t.low_rank_factor) {
            out.warnings.push_back(ft.file + ": low-rank tag dropped: " + note);
          } else {
            out.notes.push_back(ft.file + ": rank " + std::to_string(t.low_rank_factor->cols()));
          }
        }
        terms.push_back(std::move(t));
      }
      out.nep = SpmfNep(n, std::move(terms));
      break;
    }
  }
  return out;
}

}  // namespace ilan
