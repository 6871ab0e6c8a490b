#pragma once

#include "ilan/types.hpp"

namespace ilan {

/// Scalar coefficients of the symmetrizer (C) and of the SB-action (G).
///
/// Indices in `c()` and `g()` are 1-based to match the block indices of the
/// linearization. c is k x k, g is (k+1) x (k+1).
class CoeffTables {
 public:
  CoeffTables() = default;
  CoeffTables(RealMatrix c, RealMatrix g) : c_(std::move(c)), g_(std::move(g)) {}

  int k() const { return static_cast<int>(c_.rows()); }
  double c(int i, int j) const { return c_(i - 1, j - 1); }
  double g(int i, int j) const { return g_(i - 1, j - 1); }
  const RealMatrix& c_matrix() const { return c_; }
  const RealMatrix& g_matrix() const { return g_; }

 private:
  RealMatrix c_;
  RealMatrix g_;
};

/// Builds C and G from the recurrence
///   c_{i,1} = 1/(i+1),  c_{i-1,j} = (j/i) c_{i,j-1},
///   g_{1,j} = g_{j,1} = 1/j,  g_{i,j} = c_{i-1,j}/j.
/// No factorials are formed. k >= 1.
CoeffTables coeff_tables(int k);

/// G_{size} alone (size >= 1).
RealMatrix g_table(int size);

}  // namespace ilan
