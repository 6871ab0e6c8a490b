#include "ilan/structured_kernels.hpp"

#include <algorithm>

#include "ilan/coeff_tables.hpp"
#include "ilan/error.hpp"

namespace ilan {

double GFactors::tail_sum() const {
  const Index q = U.cols();
  return q < sigma.size() ? sigma.tail(sigma.size() - q).sum() : 0.0;
}

RealVector g_singular_values(int size) {
  const RealMatrix G = g_table(size);
  Eigen::JacobiSVD<RealMatrix> svd(G);
  return svd.singularValues();
}

GFactors g_factors(int k, int q) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "g_factors: k must be >= 0");
  if (q > k + 1) throw Error(ErrorCode::invalid_argument, "g_factors: rank exceeds k+1");
  const RealMatrix G = g_table(k + 1);
  Eigen::JacobiSVD<RealMatrix> svd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();

  int rank = q;
  if (rank <= 0) {
    const int cap = std::min(k + 1, kMaxAdaptiveRank);
    rank = cap;
    for (int r = 1; r <= cap; ++r) {
      const double tail = r < s.size() ? s.tail(s.size() - r).sum() : 0.0;
      if (tail <= 1e-12 * s(0)) {
        rank = r;
        break;
      }
    }
  }

  GFactors f;
  f.k = k;
  f.sigma = s;
  const RealVector root = s.head(rank).cwiseSqrt();
  f.U = svd.matrixU().leftCols(rank) * root.asDiagonal();
  f.V = svd.matrixV().leftCols(rank) * root.asDiagonal();
  return f;
}

}  // namespace ilan
