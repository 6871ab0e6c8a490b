#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ilan {

using Index = Eigen::Index;
using cplx = std::complex<double>;
// Extended-range complex used for Taylor coefficients; orders near 800 need
// factorial-sized intermediates that do not fit in a double.
using xcplx = std::complex<long double>;

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<cplx>;

/// Closed disk in the complex plane, used to restrict reported eigenvalues.
struct Disk {
  cplx center{0.0, 0.0};
  double radius = 0.0;

  bool contains(cplx z) const { return std::abs(z - center) <= radius; }
};

}  // namespace ilan
