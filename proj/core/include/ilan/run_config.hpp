#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilan/random.hpp"
#include "ilan/scalar_function.hpp"
#include "ilan/solver.hpp"
#include "ilan/spmf_nep.hpp"

namespace ilan {

enum class ProblemKind { delay_pde, random_dep, symmetrized_random, matrix_market };

std::string to_string(ProblemKind k);

/// One term of a Matrix Market problem: weight * f(l) * A, A read from file.
struct FileTerm {
  std::string file;
  ScalarFunction function = ScalarFunction::constant();
  cplx weight{1.0};
  bool low_rank = false;
};

struct ProblemSpec {
  ProblemKind kind = ProblemKind::delay_pde;
  int grid = 10;  // delay-pde N
  Index n = 0;    // random-dep, symmetrized-random
  std::uint64_t seed = kDefaultSeed;
  std::vector<FileTerm> terms;
  cplx shift{0.0};
  cplx scale{1.0};
  std::optional<Disk> target;
};

struct RunConfig {
  ProblemSpec problem;
  int maxiter = 60;
  ZStrategy strategy = ZStrategy::naive;
  int rank = 0;
  double tol = 1e-6;
  int inner_iterations = 150;
  int extraction_every = 10;
  ExtractionMethod extraction = ExtractionMethod::projected_iar;
  std::uint64_t seed = kDefaultSeed;
  std::string results_path = "results.json";
  std::string history_path = "history.csv";

  SolveOptions solve_options() const;
};

/// Parses the JSON config text. Relative matrix file paths are resolved
/// against `base_dir`. Throws config_error.
RunConfig parse_run_config(const std::string& json_text, const std::string& base_dir = ".");
RunConfig load_run_config(const std::string& path);

struct MaterializedProblem {
  SpmfNep nep;
  /// True when the problem is a symmetrize_double of a nonsymmetric one.
  bool doubled = false;
  std::vector<std::string> warnings;
  /// Human-readable construction notes (grid, boundary conditions).
  std::vector<std::string> notes;
};

MaterializedProblem materialize(const ProblemSpec& spec);

/// Parses a function descriptor such as {"type": "exponential", "rate": -1}.
ScalarFunction parse_function(const std::string& json_text);

}  // namespace ilan
