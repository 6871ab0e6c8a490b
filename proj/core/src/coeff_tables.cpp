#include "ilan/coeff_tables.hpp"

#include <algorithm>

#include "ilan/error.hpp"

namespace ilan {
namespace {

// Column j of C needs column j-1 one row deeper, so the first column is
// seeded down to row 2 * cols.
RealMatrix c_recurrence(int rows, int cols) {
  const int depth = rows + cols;
  RealMatrix c = RealMatrix::Zero(depth, cols);
  for (int i = 1; i <= depth; ++i) c(i - 1, 0) = 1.0 / (i + 1);
  for (int j = 2; j <= cols; ++j) {
    const int valid = depth - (j - 1);
    for (int r = 1; r <= valid; ++r) {
      // c_{r,j} = (j / (r+1)) c_{r+1,j-1}
      c(r - 1, j - 1) = static_cast<double>(j) / (r + 1) * c(r, j - 2);
    }
  }
  RealMatrix out = c.topRows(rows);
  // the recurrence rounds differently above and below the diagonal
  for (int i = 0; i < rows; ++i) {
    for (int j = i + 1; j < std::min(rows, cols); ++j) out(i, j) = out(j, i);
  }
  return out;
}

}  // namespace

CoeffTables coeff_tables(int k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "coeff_tables: k must be >= 1");
  const RealMatrix c_ext = c_recurrence(k, k + 1);
  RealMatrix g(k + 1, k + 1);
  for (int j = 1; j <= k + 1; ++j) {
    g(0, j - 1) = 1.0 / j;
    g(j - 1, 0) = 1.0 / j;
  }
  for (int i = 2; i <= k + 1; ++i) {
    for (int j = 2; j <= i; ++j) {
      g(i - 1, j - 1) = c_ext(i - 2, j - 1) / j;
      g(j - 1, i - 1) = g(i - 1, j - 1);
    }
  }
  return CoeffTables(c_ext.leftCols(k), std::move(g));
}

RealMatrix g_table(int size) {
  if (size < 1) throw Error(ErrorCode::invalid_argument, "g_table: size must be >= 1");
  if (size == 1) return RealMatrix::Ones(1, 1);
  return coeff_tables(size - 1).g_matrix();
}

}  // namespace ilan
