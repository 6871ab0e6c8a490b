#include "ilan/solver.hpp"

#include <algorithm>
#include <chrono>

#include "ilan/error.hpp"
#include "ilan/iar.hpp"
#include "ilan/transforms.hpp"

namespace ilan {

std::vector<EigenPair> extract_candidates(const SpmfNep& working, const KrylovState& state,
                                          ExtractionMethod method, int inner_iterations,
                                          std::optional<Disk> working_target, std::uint64_t seed) {
  if (method == ExtractionMethod::ritz) {
    std::vector<EigenPair> pairs = ritz_pairs(state);
    if (!working_target) return pairs;
    std::vector<EigenPair> kept;
    for (EigenPair& p : pairs) {
      if (working_target->contains(p.lambda)) kept.push_back(std::move(p));
    }
    return kept;
  }
  const Matrix V = orthonormal_basis(state.first_blocks);
  const ProjectedNep proj = project(working, V);
  IarOptions io;
  io.maxiter = inner_iterations;
  io.target = working_target;
  io.seed = seed;
  IarResult r = iar(proj.nep, io);
  for (EigenPair& p : r.pairs) {
    p.x = V * p.x;
    normalize_eigenvector(p.x);
  }
  return std::move(r.pairs);
}

SolveResult solve(const SpmfNep& nep, const SolveOptions& options) {
  if (!(options.tol > 0.0)) throw Error(ErrorCode::config_error, "tol must be positive");
  if (options.maxiter < 1) throw Error(ErrorCode::config_error, "maxiter must be >= 1");
  if (options.scale == cplx(0.0)) throw Error(ErrorCode::config_error, "scale must be nonzero");
  nep.require_symmetric(1e-12);

  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  auto since = [](Clock::time_point a) { return std::chrono::duration<double>(Clock::now() - a).count(); };

  const bool shifted = options.shift != cplx(0.0) || options.scale != cplx(1.0);
  const SpmfNep working = shifted ? shift_scale(nep, options.shift, options.scale) : nep;
  std::optional<Disk> working_target;
  if (options.target) {
    working_target = Disk{(options.target->center - options.shift) / options.scale,
                          options.target->radius / std::abs(options.scale)};
  }

  SolveResult out;
  out.size = nep.size();
  out.eigen.method = options.method;
  const bool polynomial = std::all_of(nep.terms().begin(), nep.terms().end(),
                                      [](const Term& t) { return t.function.polynomial_degree().has_value(); });
  if (polynomial) {
    out.warnings.push_back("polynomial problem: the truncated symmetrizer is singular; results may be unreliable");
  }
  InfiniteLanczos solver(working, options.strategy, options.rank);

  RunCallbacks cb;
  cb.progress = options.progress;
  cb.extraction_every = options.extraction_every;
  cb.extraction = [&](const KrylovState& state, int iteration) {
    const auto te = Clock::now();
    std::vector<EigenPair> cand;
    try {
      cand = extract_candidates(working, state, options.method, options.inner_iterations, working_target,
                                options.seed);
    } catch (const Error& e) {
      out.warnings.push_back("iteration " + std::to_string(iteration) + ": extraction skipped: " + e.what());
    }
    for (EigenPair& p : cand) p.lambda = unshift(p.lambda, options.shift, options.scale);
    EigenResult step = filter_converged(std::move(cand), nep, options.tol, options.target);
    if (options.accumulate) {
      merge_converged(out.eigen.pairs, step.pairs);
    } else {
      out.eigen.pairs = std::move(step.pairs);
    }
    out.eigen.rejected = std::move(step.rejected);
    out.extraction_seconds += since(te);
    out.eigen.history.push_back({iteration, static_cast<int>(out.eigen.pairs.size()), since(t0)});
  };

  const Vector q1 = options.start ? *options.start : random_unit_vector(working.size(), options.seed);
  RunResult run = solver.run(q1, options.maxiter, cb);
  out.run = std::move(run.diagnostics);
  for (const std::string& w : out.run.warnings) out.warnings.push_back(w);
  out.total_seconds = since(t0);
  return out;
}

}  // namespace ilan
