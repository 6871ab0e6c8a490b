#pragma once

// Reference computations for tests. Each one takes a route that does not go
// through the library code it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "ilan/random.hpp"
#include "ilan/spmf_nep.hpp"
#include "ilan/types.hpp"

namespace oracle {

using ilan::cplx;
using ilan::Index;
using ilan::Matrix;
using ilan::Vector;

/// Taylor coefficients of an entire/analytic f at 0 from the trapezoidal rule
/// on |z| = r; accurate to roughly eps * max|f| / r^j.
inline std::vector<cplx> cauchy_taylor(const std::function<cplx(cplx)>& f, int order, double r,
                                       int points = 512) {
  std::vector<cplx> t(order + 1, 0.0);
  for (int p = 0; p < points; ++p) {
    const double th = 2.0 * std::numbers::pi * p / points;
    const cplx z = std::polar(r, th);
    const cplx fz = f(z);
    for (int j = 0; j <= order; ++j) t[j] += fz * std::polar(1.0, -j * th);
  }
  for (int j = 0; j <= order; ++j) t[j] /= points * std::pow(r, j);
  return t;
}

/// Scalar Newton iteration.
inline cplx newton(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& df, cplx x0,
                   int iters = 50) {
  cplx x = x0;
  for (int i = 0; i < iters; ++i) {
    const cplx step = f(x) / df(x);
    x -= step;
    if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

/// 1 / binom(i + j, i) via lgamma.
inline double inverse_binomial(int i, int j) {
  return std::exp(std::lgamma(i + 1.0) + std::lgamma(j + 1.0) - std::lgamma(i + j + 1.0));
}

/// (i-1)!(j-1)!/(i+j-1)!, 1-based.
inline double g_closed(int i, int j) {
  return std::exp(std::lgamma(static_cast<double>(i)) + std::lgamma(static_cast<double>(j)) -
                  std::lgamma(static_cast<double>(i + j)));
}

inline Matrix random_matrix(Index rows, Index cols, std::uint64_t seed) {
  ilan::Rng rng(seed);
  Matrix A(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) A(i, j) = cplx(rng.normal(), rng.normal());
  return A;
}

inline Matrix random_real_symmetric(Index n, std::uint64_t seed) {
  ilan::Rng rng(seed);
  Eigen::MatrixXd G(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) G(i, j) = rng.normal();
  return ((G + G.transpose()) / 2.0).cast<cplx>();
}

inline Matrix random_complex_symmetric(Index n, std::uint64_t seed) {
  const Matrix G = random_matrix(n, n, seed);
  return (G + G.transpose()) / 2.0;
}

/// Z = sum_m A_m W (G o F_m), with F_m[i,j] = f_m^(i+j-1)(0) supplied by
/// `derivs[m](s)` and G from the closed form; plain triple loop.
inline Matrix z_reference(const ilan::SpmfNep& nep, const Matrix& W,
                          const std::vector<std::function<cplx(int)>>& derivs) {
  const Index m1 = W.cols();
  Matrix Z = Matrix::Zero(W.rows(), m1);
  for (std::size_t t = 0; t < nep.num_terms(); ++t) {
    Matrix E(m1, m1);
    for (Index i = 1; i <= m1; ++i)
      for (Index j = 1; j <= m1; ++j)
        E(i - 1, j - 1) = g_closed(static_cast<int>(i), static_cast<int>(j)) * derivs[t](static_cast<int>(i + j - 1));
    Z += nep.term(t).matrix.to_dense() * (W * E);
  }
  return Z;
}

/// Relative max-entry difference.
inline double rel_diff(const Matrix& a, const Matrix& b) {
  const double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace oracle
