// Command-line runner: solve, bench, compare-oracle, gen-tables.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ilan/coeff_tables.hpp"
#include "ilan/error.hpp"
#include "ilan/oracle.hpp"
#include "ilan/problems.hpp"
#include "ilan/results_io.hpp"
#include "ilan/run_config.hpp"
#include "ilan/solver.hpp"
#include "ilan/structured_kernels.hpp"

namespace {

using json = nlohmann::json;
using namespace ilan;

struct SolveArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  std::string results, history;
  bool quiet = false;
};

struct BenchArgs {
  std::string problem = "delay-pde";
  std::vector<int> sizes{5, 10};
  std::vector<int> iterations{20, 40};
  std::vector<std::string> strategies{"naive", "dep"};
  std::string extraction = "none";
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  std::string csv;
};

struct OracleArgs {
  Index n = 20;
  int k = 10;
  int depth = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string strategy = "naive";
};

struct TableArgs {
  int k = 100;
  std::string out_dir = ".";
};

void require_single_thread(int threads) {
  if (threads != 1) throw Error(ErrorCode::config_error, "only --threads 1 is supported for this subcommand");
}

int run_solve(const SolveArgs& a) {
  require_single_thread(a.threads);
  RunConfig cfg = load_run_config(a.config);
  if (a.seed) cfg.seed = *a.seed;
  if (!a.results.empty()) cfg.results_path = a.results;
  if (!a.history.empty()) cfg.history_path = a.history;

  const MaterializedProblem problem = materialize(cfg.problem);
  SolveOptions opts = cfg.solve_options();
  if (!a.quiet) {
    opts.progress = [](const IterationInfo& info) {
      if (info.iteration % 10 == 0) {
        std::fprintf(stderr, "iter %4d  t_sub %.3e  |omega| %.3e  %.2fs\n", info.iteration, info.t_sub,
                     std::abs(info.omega), info.elapsed_s);
      }
    };
  }
  const SolveResult result = solve(problem.nep, opts);
  write_results(cfg.results_path, cfg, problem, result);
  write_history(cfg.history_path, result.eigen.history, cfg.strategy);
  json summary = {{"status", "ok"},
                  {"n", result.size},
                  {"iterations", result.run.iterations},
                  {"n_converged", result.eigen.pairs.size()},
                  {"total_s", result.total_seconds},
                  {"results", cfg.results_path},
                  {"history", cfg.history_path}};
  std::cout << summary.dump() << '\n';
  return 0;
}

struct BenchRow {
  int size = 0;
  Index n = 0;
  int iterations = 0;
  std::string strategy;
  double seconds = 0.0;
  int converged = -1;
};

BenchRow bench_one(const BenchArgs& a, int size, int iterations, const std::string& strategy) {
  const auto st = parse_z_strategy(strategy);
  if (!st) throw Error(ErrorCode::config_error, "unknown strategy '" + strategy + "'");
  SpmfNep nep;
  if (a.problem == "delay-pde") {
    nep = gen_delay_pde(size);
  } else if (a.problem == "random-dep") {
    nep = gen_random_dep(size, a.seed);
  } else {
    throw Error(ErrorCode::config_error, "bench supports delay-pde and random-dep");
  }
  BenchRow row{size, nep.size(), iterations, strategy};
  if (a.extraction == "none") {
    InfiniteLanczos il(nep, *st);
    const RunResult r = il.run(random_unit_vector(nep.size(), a.seed), iterations);
    row.seconds = r.diagnostics.total_seconds;
  } else {
    SolveOptions o;
    o.maxiter = iterations;
    o.strategy = *st;
    o.method = parse_extraction_method(a.extraction);
    o.extraction_every = iterations;
    o.seed = a.seed;
    const SolveResult r = solve(nep, o);
    row.seconds = r.total_seconds;
    row.converged = static_cast<int>(r.eigen.pairs.size());
  }
  return row;
}

int run_bench(const BenchArgs& a) {
  if (a.threads < 1) throw Error(ErrorCode::config_error, "--threads must be >= 1");
  std::vector<std::function<BenchRow()>> jobs;
  for (int size : a.sizes)
    for (int it : a.iterations)
      for (const std::string& s : a.strategies) jobs.push_back([&a, size, it, s] { return bench_one(a, size, it, s); });

  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < jobs.size(); i += static_cast<std::size_t>(a.threads)) {
    std::vector<std::future<BenchRow>> batch;
    for (std::size_t j = i; j < std::min(jobs.size(), i + static_cast<std::size_t>(a.threads)); ++j) {
      batch.push_back(std::async(a.threads == 1 ? std::launch::deferred : std::launch::async, jobs[j]));
    }
    for (auto& f : batch) rows.push_back(f.get());
  }

  std::ostringstream csv;
  csv << "size,n,iterations,strategy,seconds,n_converged\n";
  std::printf("%8s %8s %6s %14s %12s %6s\n", "size", "n", "iter", "strategy", "seconds", "conv");
  for (const BenchRow& r : rows) {
    std::printf("%8d %8lld %6d %14s %12.4f %6s\n", r.size, static_cast<long long>(r.n), r.iterations,
                r.strategy.c_str(), r.seconds, r.converged < 0 ? "-" : std::to_string(r.converged).c_str());
    csv << r.size << ',' << r.n << ',' << r.iterations << ',' << r.strategy << ',' << r.seconds << ','
        << (r.converged < 0 ? std::string() : std::to_string(r.converged)) << '\n';
  }
  if (!a.csv.empty()) {
    std::ofstream out(a.csv);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + a.csv);
    out << csv.str();
  }
  return 0;
}

int run_oracle(const OracleArgs& a) {
  const auto st = parse_z_strategy(a.strategy);
  if (!st) throw Error(ErrorCode::config_error, "unknown strategy '" + a.strategy + "'");
  const SpmfNep nep = gen_random_mixed(a.n, a.seed);
  const int depth = a.depth > 0 ? a.depth : a.k + 4;
  const EquivalenceReport r = compare_with_dense(nep, a.k, depth, random_unit_vector(a.n, a.seed), *st);
  json j = {{"n", a.n},
            {"k", a.k},
            {"depth", depth},
            {"strategy", a.strategy},
            {"iterations", r.iterations},
            {"max_t_deviation", r.t_deviation},
            {"max_omega_deviation", r.omega_deviation},
            {"max_block_deviation", r.block_deviation},
            {"dense_tail_norm", r.tail_norm}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

void write_matrix_csv(const std::filesystem::path& p, const RealMatrix& M) {
  std::ofstream out(p);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + p.string());
  char buf[32];
  for (Index i = 0; i < M.rows(); ++i) {
    for (Index j = 0; j < M.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", M(i, j));
      out << (j ? "," : "") << buf;
    }
    out << '\n';
  }
}

int run_tables(const TableArgs& a) {
  if (a.k < 1) throw Error(ErrorCode::config_error, "--k must be >= 1");
  const std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);
  const CoeffTables t = coeff_tables(a.k);
  write_matrix_csv(dir / "c_table.csv", t.c_matrix());
  write_matrix_csv(dir / "g_table.csv", g_table(a.k));
  const RealVector sigma = g_singular_values(a.k);
  std::ofstream out(dir / "g_sigma.csv");
  if (!out) throw Error(ErrorCode::io_error, "cannot write g_sigma.csv");
  out << "j,sigma\n";
  char buf[32];
  for (Index j = 0; j < sigma.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%.17g", sigma(j));
    out << j + 1 << ',' << buf << '\n';
  }
  std::cout << json{{"status", "ok"}, {"k", a.k}, {"dir", dir.string()}}.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinite Lanczos for symmetric nonlinear eigenvalue problems"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Run the solver from a JSON config");
  solve_cmd->add_option("config", sa.config, "Config file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--seed", sa.seed, "Override the config seed");
  solve_cmd->add_option("--threads", sa.threads, "Worker threads (1 only)");
  solve_cmd->add_option("--results", sa.results, "Results JSON path");
  solve_cmd->add_option("--history", sa.history, "History CSV path");
  solve_cmd->add_flag("--quiet", sa.quiet, "No progress output");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Timing table over sizes, iteration counts and strategies");
  bench_cmd->add_option("--problem", ba.problem, "delay-pde or random-dep");
  bench_cmd->add_option("--sizes", ba.sizes, "Grid N (delay-pde) or n (random-dep)")->delimiter(',');
  bench_cmd->add_option("--iterations", ba.iterations, "Iteration counts")->delimiter(',');
  bench_cmd->add_option("--strategies", ba.strategies, "Z strategies")->delimiter(',');
  bench_cmd->add_option("--extraction", ba.extraction, "none, ritz or projected-iar");
  bench_cmd->add_option("--seed", ba.seed, "Seed");
  bench_cmd->add_option("--threads", ba.threads, "Run configurations in parallel");
  bench_cmd->add_option("--csv", ba.csv, "Also write the table as CSV");

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("compare-oracle", "Structured iteration vs dense truncated pencil");
  oracle_cmd->add_option("--n", oa.n, "Problem size");
  oracle_cmd->add_option("--k", oa.k, "Iterations");
  oracle_cmd->add_option("--depth", oa.depth, "Truncation depth (default k + 4)");
  oracle_cmd->add_option("--seed", oa.seed, "Seed");
  oracle_cmd->add_option("--strategy", oa.strategy, "Z strategy");
  int oracle_threads = 1;
  oracle_cmd->add_option("--threads", oracle_threads, "Worker threads (1 only)");

  TableArgs ta;
  auto* tables_cmd = app.add_subcommand("gen-tables", "Write C, G and singular values of G as CSV");
  tables_cmd->add_option("--k", ta.k, "Table size");
  tables_cmd->add_option("--out-dir", ta.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("usage", e.what()) << '\n';
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(sa);
    if (bench_cmd->parsed()) return run_bench(ba);
    if (oracle_cmd->parsed()) {
      require_single_thread(oracle_threads);
      return run_oracle(oa);
    }
    if (tables_cmd->parsed()) return run_tables(ta);
  } catch (const Error& e) {
    std::cout << error_json(e) << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cout << error_json("internal", e.what()) << '\n';
    return 1;
  }
  return 0;
}
