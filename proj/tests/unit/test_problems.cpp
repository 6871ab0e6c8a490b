#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "ilan/error.hpp"
#include "ilan/matrix_market.hpp"
#include "ilan/problems.hpp"
#include "oracles.hpp"

using namespace ilan;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ilan_test_" + name)).string();
}

}  // namespace

TEST(DelayPde, SizeAndStructure) {
  const SpmfNep nep = gen_delay_pde(20);
  EXPECT_EQ(nep.size(), 400);
  EXPECT_EQ(nep.num_terms(), 3u);
  EXPECT_TRUE(nep.is_symmetric());
  EXPECT_TRUE(nep.all_sparse());
  EXPECT_EQ(nep.term(0).polynomial_degree, 1);
  EXPECT_EQ(nep.term(2).function.kind(), ScalarFunction::Kind::exponential);
  EXPECT_THROW((void)gen_delay_pde(1), Error);
}

TEST(DelayPde, LaplacianSpectrum) {
  const int N = 6;
  const double h = std::numbers::pi / (N + 1);
  std::vector<double> ref;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      ref.push_back(-(4.0 / (h * h)) * (std::pow(std::sin(i * h / 2), 2) + std::pow(std::sin(j * h / 2), 2)));
  std::sort(ref.begin(), ref.end());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Matrix(fd_laplacian(N)).real());
  for (int i = 0; i < N * N; ++i) EXPECT_NEAR(es.eigenvalues()(i), ref[i], 1e-10 * std::abs(ref[i]));
}

TEST(DelayPde, CoefficientsOnGrid) {
  const int N = 3;
  const SpmfNep nep = gen_delay_pde(N);
  const double h = std::numbers::pi / 4;
  const Matrix A2 = nep.term(1).matrix.to_dense() - Matrix(fd_laplacian(N));
  const Matrix A3 = nep.term(2).matrix.to_dense();
  // second grid point in x1, third in x2
  const Index r = 2 * N + 1;
  EXPECT_NEAR(A2(r, r).real(), 8 * std::sin(2 * h) * std::sin(3 * h), 1e-13);
  EXPECT_NEAR(A3(r, r).real(), 100 * std::abs(std::sin(5 * h)), 1e-12);
}

TEST(RandomDep, DeterministicAndSymmetric) {
  const SpmfNep a = gen_random_dep(15, 42), b = gen_random_dep(15, 42), c = gen_random_dep(15, 43);
  EXPECT_TRUE(a.is_symmetric());
  EXPECT_EQ(a.term(1).matrix.dense(), b.term(1).matrix.dense());
  EXPECT_EQ(a.term(2).matrix.dense(), b.term(2).matrix.dense());
  EXPECT_NE(a.term(1).matrix.dense(), c.term(1).matrix.dense());
  EXPECT_EQ(a.term(2).function.kind(), ScalarFunction::Kind::exponential);
}

TEST(Rng, KnownStream) {
  // mt19937_64 with the default seed 5489 has 10000th output 9981545732273789042
  std::mt19937_64 e;
  e.discard(9999);
  EXPECT_EQ(e(), 9981545732273789042ULL);
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  const Vector v = random_unit_vector(10, 3);
  EXPECT_NEAR(v.norm(), 1.0, 1e-15);
  EXPECT_EQ(v, random_unit_vector(10, 3));
}

TEST(SymmetrizedRandom, Construction) {
  const SpmfNep base = gen_nonsymmetric_tridiagonal(6);
  EXPECT_FALSE(base.is_symmetric(1e-12));
  const Matrix A1 = base.term(0).matrix.to_dense();
  const Matrix A3 = base.term(2).matrix.to_dense();
  const Matrix A4 = base.term(3).matrix.to_dense();
  EXPECT_EQ(A1(0, 1), cplx(500.0));
  EXPECT_EQ(A1(1, 0), cplx(500.0));
  EXPECT_EQ(A1(0, 0), cplx(0.0));
  EXPECT_LE((A3 - A1 / 500.0).norm(), 0.0);
  EXPECT_EQ(A4(1, 0), cplx(0.0, 1.0));
  EXPECT_EQ(A4(0, 1), cplx(0.0));
  const SpmfNep d = gen_symmetrized_random(6);
  EXPECT_EQ(d.size(), 12);
  EXPECT_TRUE(d.is_symmetric());
}

TEST(LowRank, DetectsConstructedRank) {
  const Index n = 80;
  const Eigen::MatrixXd U = oracle::random_matrix(n, 19, 7).real();
  const Matrix A = (U * U.transpose()).cast<cplx>();
  std::string note;
  const auto f = detect_low_rank(TermMatrix(A), 1e-12, &note);
  ASSERT_TRUE(f.has_value()) << note;
  EXPECT_EQ(f->cols(), 19);
  EXPECT_LE((*f * f->transpose() - A).norm(), 1e-12 * A.norm());
  // indefinite and imaginary-scaled matrices still factor
  Eigen::MatrixXd B = U.leftCols(3) * U.leftCols(3).transpose() - U.col(4) * U.col(4).transpose();
  const Matrix iB = cplx(0, 1) * B.cast<cplx>();
  const auto g = detect_low_rank(TermMatrix(SparseMatrix(iB.sparseView())), 1e-12, &note);
  ASSERT_TRUE(g.has_value()) << note;
  EXPECT_EQ(g->cols(), 4);
  // full complex symmetric is not handled
  EXPECT_FALSE(detect_low_rank(TermMatrix(oracle::random_complex_symmetric(5, 1)), 1e-12, &note).has_value());
  EXPECT_FALSE(note.empty());
}

TEST(MatrixMarket, RoundTrip) {
  const SparseMatrix A = gen_delay_pde(4).term(1).matrix.sparse();
  for (bool sym : {false, true}) {
    const std::string p = temp_path(sym ? "sym.mtx" : "gen.mtx");
    write_matrix_market(p, A, sym);
    const SparseMatrix B = read_matrix_market(p);
    EXPECT_EQ(B.nonZeros(), A.nonZeros());
    EXPECT_LE(Matrix(A - B).cwiseAbs().maxCoeff(), 1e-15 * Matrix(A).cwiseAbs().maxCoeff());
    std::filesystem::remove(p);
  }
  SparseMatrix C(2, 2);
  C.insert(0, 1) = cplx(1.5, -2.0);
  const std::string p = temp_path("cplx.mtx");
  write_matrix_market(p, C);
  EXPECT_EQ(read_matrix_market(p).coeff(0, 1), cplx(1.5, -2.0));
  std::filesystem::remove(p);
}

TEST(MatrixMarket, PatternAndErrors) {
  const std::string p = temp_path("pattern.mtx");
  {
    std::ofstream o(p);
    o << "%%MatrixMarket matrix coordinate pattern symmetric\n% comment\n3 3 2\n1 1\n3 1\n";
  }
  const SparseMatrix A = read_matrix_market(p);
  EXPECT_EQ(A.coeff(0, 2), cplx(1.0));
  EXPECT_EQ(A.coeff(2, 0), cplx(1.0));
  {
    std::ofstream o(p);
    o << "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n";
  }
  try {
    (void)read_matrix_market(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::file_format);
  }
  {
    std::ofstream o(p);
    o << "%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 1.0\n";
  }
  EXPECT_THROW((void)read_matrix_market(p), Error);
  std::filesystem::remove(p);
  try {
    (void)read_matrix_market(temp_path("missing.mtx"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::io_error);
  }
}
