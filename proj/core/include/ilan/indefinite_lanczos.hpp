#pragma once

#include <vector>

#include "ilan/types.hpp"

namespace ilan {

enum class LanczosStatus { completed, happy_breakdown, breakdown_omega };

const char* to_string(LanczosStatus status);

/// Output of the dense indefinite Lanczos process on A^{-1} B.
///
/// After `steps` iterations: A^{-1} B Q(:, 0:steps) = Q * T and
/// Q^T B Q = diag(omega), with T of size (steps+1) x steps.
struct DenseLanczosResult {
  Matrix Q;
  Matrix T;
  std::vector<cplx> omega;
  int steps = 0;
  LanczosStatus status = LanczosStatus::completed;
};

/// Indefinite Lanczos with the B-bilinear form x^T B y (A, B symmetric).
/// Throws breakdown_omega if omega_1 vanishes.
DenseLanczosResult indefinite_lanczos_dense(const Matrix& A, const Matrix& B, const Vector& q1,
                                            int k);

}  // namespace ilan
