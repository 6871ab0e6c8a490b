#include "ilan/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ilan {
namespace {

using json = nlohmann::json;

json pair_json(cplx z) { return json::array({z.real(), z.imag()}); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

}  // namespace

std::string results_json(const RunConfig& config, const MaterializedProblem& problem, const SolveResult& result) {
  json j;
  j["problem"] = {{"kind", to_string(config.problem.kind)},
                  {"size", result.size},
                  {"doubled", problem.doubled},
                  {"shift", pair_json(config.problem.shift)},
                  {"scale", pair_json(config.problem.scale)},
                  {"notes", problem.notes}};
  j["settings"] = {{"maxiter", config.maxiter},
                   {"strategy", to_string(config.strategy)},
                   {"extraction", to_string(config.extraction)},
                   {"tol", config.tol},
                   {"inner_iterations", config.inner_iterations},
                   {"extraction_every", config.extraction_every},
                   {"seed", config.seed}};
  json eig = json::array(), res = json::array();
  for (const EigenPair& p : result.eigen.pairs) {
    eig.push_back(pair_json(p.lambda));
    res.push_back(p.err);
  }
  j["eigenvalues"] = eig;
  j["residuals"] = res;
  j["n_converged"] = result.eigen.pairs.size();
  json hist = json::array();
  for (const Checkpoint& c : result.eigen.history) {
    hist.push_back({{"iteration", c.iteration}, {"n_converged", c.n_converged}, {"elapsed_s", c.elapsed_s}});
  }
  j["checkpoints"] = hist;
  j["iterations"] = result.run.iterations;
  j["status"] = to_string(result.run.status);
  j["timings"] = {{"total_s", result.total_seconds},
                  {"extraction_s", result.extraction_seconds},
                  {"iteration_s", result.run.iteration_seconds}};
  std::vector<std::string> warnings = problem.warnings;
  warnings.insert(warnings.end(), result.warnings.begin(), result.warnings.end());
  j["warnings"] = warnings;
  return j.dump(2) + "\n";
}

void write_results(const std::string& path, const RunConfig& config, const MaterializedProblem& problem,
                   const SolveResult& result) {
  write_text(path, results_json(config, problem, result));
}

std::string history_csv(const std::vector<Checkpoint>& history, ZStrategy strategy) {
  std::ostringstream os;
  os << "iteration,n_converged,strategy,elapsed_s\n";
  char buf[64];
  for (const Checkpoint& c : history) {
    std::snprintf(buf, sizeof buf, "%.6f", c.elapsed_s);
    os << c.iteration << ',' << c.n_converged << ',' << to_string(strategy) << ',' << buf << '\n';
  }
  return os.str();
}

void write_history(const std::string& path, const std::vector<Checkpoint>& history, ZStrategy strategy) {
  write_text(path, history_csv(history, strategy));
}

std::string error_json(const std::string& code, const std::string& message) {
  json j;
  j["error"] = {{"code", code}, {"message", message}};
  return j.dump();
}

std::string error_json(const Error& e) { return error_json(std::string(to_string(e.code())), e.what()); }

}  // namespace ilan
