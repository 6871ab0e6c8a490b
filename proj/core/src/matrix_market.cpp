#include "ilan/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "ilan/error.hpp"

namespace ilan {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::file_format, path + ": " + what);
}

}  // namespace

SparseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) bad(path, "empty file");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix") bad(path, "missing %%MatrixMarket matrix banner");
  if (lower(format) != "coordinate") bad(path, "only coordinate format is supported");
  field = lower(field);
  symmetry = lower(symmetry);
  if (field != "real" && field != "complex" && field != "integer" && field != "pattern") {
    bad(path, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") bad(path, "unsupported symmetry '" + symmetry + "'");

  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  Index rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream sz(line);
    if (!(sz >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) bad(path, "bad size line");
  }
  if (symmetry == "symmetric" && rows != cols) bad(path, "symmetric matrix must be square");

  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(static_cast<std::size_t>(symmetry == "symmetric" ? 2 * nnz : nnz));
  Index read = 0;
  while (read < nnz && std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream es(line);
    Index i = 0, j = 0;
    double re = 1.0, im = 0.0;
    if (!(es >> i >> j)) bad(path, "bad entry line " + std::to_string(read + 1));
    if (field == "complex") {
      if (!(es >> re >> im)) bad(path, "bad complex value at entry " + std::to_string(read + 1));
    } else if (field != "pattern") {
      if (!(es >> re)) bad(path, "bad value at entry " + std::to_string(read + 1));
    }
    if (i < 1 || i > rows || j < 1 || j > cols) bad(path, "index out of range at entry " + std::to_string(read + 1));
    trip.emplace_back(i - 1, j - 1, cplx(re, im));
    if (symmetry == "symmetric" && i != j) trip.emplace_back(j - 1, i - 1, cplx(re, im));
    ++read;
  }
  if (read != nnz) bad(path, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(read));
  SparseMatrix A(rows, cols);
  A.setFromTriplets(trip.begin(), trip.end());
  A.makeCompressed();
  return A;
}

void write_matrix_market(const std::string& path, const SparseMatrix& A, bool symmetric) {
  if (symmetric) {
    if (A.rows() != A.cols()) throw Error(ErrorCode::dimension_mismatch, "symmetric storage needs a square matrix");
    const SparseMatrix At = A.transpose();
    if ((A - At).norm() != 0.0) throw Error(ErrorCode::invalid_argument, "matrix is not exactly symmetric");
  }
  bool real = true;
  for (Index c = 0; c < A.outerSize() && real; ++c)
    for (SparseMatrix::InnerIterator it(A, c); it; ++it)
      if (it.value().imag() != 0.0) { real = false; break; }

  std::vector<std::string> lines;
  char buf[128];
  for (Index c = 0; c < A.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(A, c); it; ++it) {
      if (symmetric && it.row() < it.col()) continue;
      if (real) {
        std::snprintf(buf, sizeof buf, "%lld %lld %.17g", static_cast<long long>(it.row() + 1),
                      static_cast<long long>(it.col() + 1), it.value().real());
      } else {
        std::snprintf(buf, sizeof buf, "%lld %lld %.17g %.17g", static_cast<long long>(it.row() + 1),
                      static_cast<long long>(it.col() + 1), it.value().real(), it.value().imag());
      }
      lines.emplace_back(buf);
    }
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  out << "%%MatrixMarket matrix coordinate " << (real ? "real" : "complex") << ' '
      << (symmetric ? "symmetric" : "general") << '\n';
  out << A.rows() << ' ' << A.cols() << ' ' << lines.size() << '\n';
  for (const std::string& l : lines) out << l << '\n';
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

}  // namespace ilan
