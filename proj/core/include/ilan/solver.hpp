#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ilan/extraction.hpp"
#include "ilan/infinite_lanczos.hpp"
#include "ilan/random.hpp"

namespace ilan {

struct SolveOptions {
  int maxiter = 60;
  ZStrategy strategy = ZStrategy::naive;
  /// lowrank-fft rank, 0 = adaptive.
  int rank = 0;
  double tol = 1e-6;
  int inner_iterations = 150;
  int extraction_every = 10;
  ExtractionMethod method = ExtractionMethod::projected_iar;
  /// In the original (unshifted) variable.
  std::optional<Disk> target;
  std::uint64_t seed = kDefaultSeed;
  /// Defaults to random_unit_vector(n, seed).
  std::optional<Vector> start;
  /// The iteration runs on M(shift + scale * mu).
  cplx shift{0.0};
  cplx scale{1.0};
  /// Keep pairs verified at earlier checkpoints.
  bool accumulate = true;
  std::function<void(const IterationInfo&)> progress;
};

struct SolveResult {
  EigenResult eigen;
  RunDiagnostics run;
  std::vector<std::string> warnings;
  double extraction_seconds = 0.0;
  double total_seconds = 0.0;
  Index size = 0;
};

/// Candidate pairs from a Krylov state of the working problem, in the
/// working variable, Err not yet checked against any tolerance.
std::vector<EigenPair> extract_candidates(const SpmfNep& working, const KrylovState& state,
                                          ExtractionMethod method, int inner_iterations,
                                          std::optional<Disk> working_target = std::nullopt,
                                          std::uint64_t seed = kDefaultSeed);

/// Full pipeline: optional shift/scale, infinite Lanczos, extraction at the
/// configured cadence, verification on the original problem.
SolveResult solve(const SpmfNep& nep, const SolveOptions& options = {});

}  // namespace ilan
