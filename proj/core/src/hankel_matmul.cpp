#include "ilan/structured_kernels.hpp"

#include <unsupported/Eigen/FFT>

#include "ilan/error.hpp"

namespace ilan {
namespace {

std::size_t next_pow2(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

// One transform object per thread; it caches plans (twiddles) per length.
Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace

Matrix hankel_dense(std::span<const cplx> seq) {
  if (seq.size() % 2 == 0) throw Error(ErrorCode::invalid_argument, "Hankel sequence must have odd length");
  const Index m = static_cast<Index>(seq.size() + 1) / 2;
  Matrix H(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) H(i, j) = seq[static_cast<std::size_t>(i + j)];
  }
  return H;
}

Matrix hankel_matmul(std::span<const cplx> seq, const Matrix& X) {
  if (seq.size() % 2 == 0) throw Error(ErrorCode::invalid_argument, "Hankel sequence must have odd length");
  const Index m = static_cast<Index>(seq.size() + 1) / 2;
  if (X.rows() != m) throw Error(ErrorCode::dimension_mismatch, "hankel_matmul: X has wrong row count");
  // kissfft cannot plan a length-1 transform
  if (m == 1) return seq[0] * X;

  // y_i = sum_l h[i + m - 1 - l] x'_l with x'_l = x_{m-1-l}: entries m-1..2m-2
  // of the linear convolution h * x'. A circular length >= 2m-1 avoids
  // aliasing into that window.
  const std::size_t P = next_pow2(seq.size());
  auto& fft = fft_engine();

  std::vector<cplx> h(P, cplx{0.0});
  std::copy(seq.begin(), seq.end(), h.begin());
  std::vector<cplx> h_hat;
  fft.fwd(h_hat, h);

  Matrix Y(m, X.cols());
  std::vector<cplx> x(P), x_hat, y;
  for (Index c = 0; c < X.cols(); ++c) {
    std::fill(x.begin(), x.end(), cplx{0.0});
    for (Index l = 0; l < m; ++l) x[static_cast<std::size_t>(l)] = X(m - 1 - l, c);
    fft.fwd(x_hat, x);
    for (std::size_t i = 0; i < P; ++i) x_hat[i] *= h_hat[i];
    fft.inv(y, x_hat);
    for (Index i = 0; i < m; ++i) Y(i, c) = y[static_cast<std::size_t>(i + m - 1)];
  }
  return Y;
}

}  // namespace ilan
