#include "ilan/transforms.hpp"

#include <vector>

#include "ilan/error.hpp"

namespace ilan {

SpmfNep shift_scale(const SpmfNep& nep, cplx center, cplx scale) {
  if (scale == cplx{0.0}) throw Error(ErrorCode::invalid_argument, "shift_scale: scale must be nonzero");
  std::vector<Term> terms;
  terms.reserve(nep.num_terms());
  for (const Term& t : nep.terms()) {
    Term s = t;
    s.function = ScalarFunction::affine(t.function, center, scale);
    terms.push_back(std::move(s));
  }
  return SpmfNep(nep.size(), std::move(terms));
}

SpmfNep symmetrize_double(const SpmfNep& nep) {
  const Index n = nep.size();
  std::vector<Term> terms;
  terms.reserve(nep.num_terms());
  for (const Term& t : nep.terms()) {
    Term d = t;
    d.low_rank_factor.reset();
    if (t.matrix.is_sparse()) {
      const SparseMatrix& A = t.matrix.sparse();
      std::vector<Eigen::Triplet<cplx>> trip;
      trip.reserve(2 * static_cast<std::size_t>(A.nonZeros()));
      for (Index c = 0; c < A.outerSize(); ++c) {
        for (SparseMatrix::InnerIterator it(A, c); it; ++it) {
          trip.emplace_back(it.row(), n + it.col(), it.value());
          trip.emplace_back(n + it.col(), it.row(), it.value());
        }
      }
      SparseMatrix D(2 * n, 2 * n);
      D.setFromTriplets(trip.begin(), trip.end());
      d.matrix = TermMatrix(std::move(D));
    } else {
      Matrix D = Matrix::Zero(2 * n, 2 * n);
      D.topRightCorner(n, n) = t.matrix.dense();
      D.bottomLeftCorner(n, n) = t.matrix.dense().transpose();
      d.matrix = TermMatrix(std::move(D));
    }
    terms.push_back(std::move(d));
  }
  return SpmfNep(2 * n, std::move(terms));
}

Vector unpack_doubled(const Vector& v) {
  if (v.size() % 2 != 0) throw Error(ErrorCode::dimension_mismatch, "doubled eigenvector has odd length");
  return v.tail(v.size() / 2);
}

}  // namespace ilan
