#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ilan/error.hpp"
#include "ilan/matrix_market.hpp"
#include "ilan/problems.hpp"
#include "ilan/results_io.hpp"
#include "ilan/run_config.hpp"
#include "oracles.hpp"

using namespace ilan;
using json = nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(RunConfig, Defaults) {
  const RunConfig c = parse_run_config(R"({"problem": {"kind": "delay-pde", "N": 7}})");
  EXPECT_EQ(c.problem.kind, ProblemKind::delay_pde);
  EXPECT_EQ(c.problem.grid, 7);
  EXPECT_EQ(c.maxiter, 60);
  EXPECT_EQ(c.tol, 1e-6);
  EXPECT_EQ(c.inner_iterations, 150);
  EXPECT_EQ(c.extraction_every, 10);
  EXPECT_EQ(c.strategy, ZStrategy::naive);
  EXPECT_EQ(c.extraction, ExtractionMethod::projected_iar);
}

TEST(RunConfig, FullDocument) {
  const RunConfig c = parse_run_config(R"({
    "problem": {"kind": "random-dep", "n": 40, "seed": 9, "shift": [1, 2], "scale": 0.5,
                "target": {"center": [0, 0], "radius": 3}},
    "maxiter": 25, "strategy": "lowrank-fft", "rank": 12, "tol": 1e-8,
    "inner_iterations": 80, "extraction_every": 5, "extraction": "ritz", "seed": 3,
    "output": {"results": "r.json", "history": "h.csv"}})");
  EXPECT_EQ(c.problem.n, 40);
  EXPECT_EQ(c.problem.seed, 9u);
  EXPECT_EQ(c.problem.shift, cplx(1, 2));
  EXPECT_EQ(c.problem.scale, cplx(0.5));
  ASSERT_TRUE(c.problem.target.has_value());
  EXPECT_EQ(c.problem.target->radius, 3.0);
  EXPECT_EQ(c.strategy, ZStrategy::lowrank_fft);
  EXPECT_EQ(c.rank, 12);
  EXPECT_EQ(c.extraction, ExtractionMethod::ritz);
  EXPECT_EQ(c.results_path, "r.json");
  const SolveOptions o = c.solve_options();
  EXPECT_EQ(o.maxiter, 25);
  EXPECT_EQ(o.shift, cplx(1, 2));
}

TEST(RunConfig, Errors) {
  auto bad = [](const char* text) {
    return code_of([&] { (void)parse_run_config(text); });
  };
  EXPECT_EQ(bad("{"), ErrorCode::config_error);
  EXPECT_EQ(bad(R"({"maxiter": 3})"), ErrorCode::config_error);
  EXPECT_EQ(bad(R"({"problem": {"kind": "delay-pde"}, "maxiter": 0})"), ErrorCode::config_error);
  EXPECT_EQ(bad(R"({"problem": {"kind": "delay-pde"}, "tol": -1})"), ErrorCode::config_error);
  EXPECT_EQ(bad(R"({"problem": {"kind": "delay-pde"}, "strategy": "fast"})"), ErrorCode::config_error);
  EXPECT_EQ(bad(R"({"problem": {"kind": "delay-pde"}, "colour": 1})"), ErrorCode::config_error);
  EXPECT_EQ(bad(R"({"problem": {"kind": "cube"}})"), ErrorCode::config_error);
  EXPECT_EQ(bad(R"({"problem": {"kind": "matrix-market", "terms": []}})"), ErrorCode::config_error);
  EXPECT_EQ(bad(R"({"problem": {"kind": "random-dep", "n": 4, "scale": 0}})"), ErrorCode::config_error);
}

TEST(RunConfig, FunctionDescriptors) {
  const cplx z(0.3, 0.2);
  EXPECT_NEAR(std::abs(parse_function(R"({"type": "exponential", "rate": -2})")(z) - std::exp(-2.0 * z)), 0, 1e-15);
  EXPECT_NEAR(std::abs(parse_function(R"({"type": "sqrt-shift", "a": 1, "b": [-4, 0]})")(z) - std::sqrt(z - 4.0)), 0,
              1e-15);
  EXPECT_EQ(parse_function(R"({"type": "monomial", "degree": 3})").polynomial_degree(), 3);
  EXPECT_EQ(parse_function(R"({"type": "negated-identity"})")(z), -z);
  EXPECT_THROW((void)parse_function(R"({"type": "cosh"})"), Error);
  EXPECT_THROW((void)parse_function(R"({"type": "sine", "rate": 1})"), Error);
}

TEST(Materialize, MatrixMarketProblem) {
  const auto dir = std::filesystem::temp_directory_path() / "ilan_mm_problem";
  std::filesystem::create_directories(dir);
  const Index n = 30;
  const Eigen::MatrixXd U = oracle::random_matrix(n, 4, 2).real();
  const Matrix K = oracle::random_real_symmetric(n, 5);
  write_matrix_market((dir / "K.mtx").string(), SparseMatrix((K + 10.0 * Matrix::Identity(n, n)).sparseView()), true);
  write_matrix_market((dir / "M.mtx").string(), SparseMatrix(Matrix(Matrix::Identity(n, n)).sparseView()), true);
  write_matrix_market((dir / "W.mtx").string(), SparseMatrix(Matrix((U * U.transpose()).cast<cplx>()).sparseView()),
                      false);
  const std::string cfg = R"({"problem": {"kind": "matrix-market", "terms": [
      {"file": "K.mtx", "function": {"type": "constant"}},
      {"file": "M.mtx", "function": {"type": "negated-identity"}},
      {"file": "W.mtx", "function": {"type": "sqrt-shift", "a": 1, "b": 4}, "weight": [0, 1], "low_rank": true}]}})";
  {
    std::ofstream o(dir / "cfg.json");
    o << cfg;
  }
  const RunConfig c = load_run_config((dir / "cfg.json").string());
  const MaterializedProblem p = materialize(c.problem);
  EXPECT_EQ(p.nep.size(), n);
  EXPECT_TRUE(p.nep.is_symmetric(1e-14));
  EXPECT_EQ(p.nep.term(1).polynomial_degree, 1);
  ASSERT_TRUE(p.nep.term(2).low_rank_factor.has_value());
  EXPECT_EQ(p.nep.term(2).low_rank_factor->cols(), 4);
  EXPECT_EQ(p.nep.term(2).matrix.to_dense()(0, 0), cplx(0, 1) * (U * U.transpose())(0, 0));
  std::filesystem::remove_all(dir);
}

TEST(Materialize, DimensionMismatch) {
  const auto dir = std::filesystem::temp_directory_path() / "ilan_mm_bad";
  std::filesystem::create_directories(dir);
  write_matrix_market((dir / "a.mtx").string(), SparseMatrix(Matrix(Matrix::Identity(3, 3)).sparseView()));
  write_matrix_market((dir / "b.mtx").string(), SparseMatrix(Matrix(Matrix::Identity(4, 4)).sparseView()));
  const RunConfig c = parse_run_config(R"({"problem": {"kind": "matrix-market", "terms": [
      {"file": "a.mtx", "function": {"type": "constant"}},
      {"file": "b.mtx", "function": {"type": "sine"}}]}})",
                                       dir.string());
  EXPECT_EQ(code_of([&] { (void)materialize(c.problem); }), ErrorCode::dimension_mismatch);
  std::filesystem::remove_all(dir);
}

TEST(Results, JsonAndCsvShape) {
  RunConfig cfg = parse_run_config(R"({"problem": {"kind": "delay-pde", "N": 4}, "maxiter": 20, "strategy": "dep"})");
  const MaterializedProblem p = materialize(cfg.problem);
  const SolveResult r = solve(p.nep, cfg.solve_options());
  const json j = json::parse(results_json(cfg, p, r));
  ASSERT_EQ(j["eigenvalues"].size(), r.eigen.pairs.size());
  ASSERT_FALSE(r.eigen.pairs.empty());
  EXPECT_EQ(j["eigenvalues"][0].size(), 2u);
  EXPECT_EQ(j["eigenvalues"][0][0].get<double>(), r.eigen.pairs[0].lambda.real());
  EXPECT_EQ(j["residuals"].size(), r.eigen.pairs.size());
  EXPECT_EQ(j["checkpoints"].size(), 2u);
  EXPECT_TRUE(j["timings"].contains("total_s"));
  EXPECT_EQ(j["settings"]["strategy"], "dep");

  const std::string csv = history_csv(r.eigen.history, ZStrategy::dep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "iteration,n_converged,strategy,elapsed_s");
  EXPECT_NE(csv.find("\n10,"), std::string::npos);
  EXPECT_NE(csv.find(",dep,"), std::string::npos);
}

TEST(Results, ErrorJson) {
  const json j = json::parse(error_json(Error(ErrorCode::singular_m0, "bad")));
  EXPECT_EQ(j["error"]["code"], "singular-M0");
  EXPECT_EQ(j["error"]["message"], "bad");
}
