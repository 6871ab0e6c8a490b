#pragma once

#include <string>
#include <vector>

#include "ilan/error.hpp"
#include "ilan/run_config.hpp"
#include "ilan/solver.hpp"

namespace ilan {

/// Results document: eigenvalues as [re, im], residuals, timings,
/// per-checkpoint converged counts, warnings and problem notes.
std::string results_json(const RunConfig& config, const MaterializedProblem& problem, const SolveResult& result);
void write_results(const std::string& path, const RunConfig& config, const MaterializedProblem& problem,
                   const SolveResult& result);

/// CSV with header iteration,n_converged,strategy,elapsed_s.
std::string history_csv(const std::vector<Checkpoint>& history, ZStrategy strategy);
void write_history(const std::string& path, const std::vector<Checkpoint>& history, ZStrategy strategy);

/// {"error": {"code": ..., "message": ...}}
std::string error_json(const std::string& code, const std::string& message);
std::string error_json(const Error& e);

}  // namespace ilan
