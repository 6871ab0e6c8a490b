#pragma once

#include <string>

#include "ilan/types.hpp"

namespace ilan {

/// Reads a coordinate-format Matrix Market file (real, complex, integer or
/// pattern; general or symmetric). Symmetric storage is expanded.
/// Throws file_format or io_error.
SparseMatrix read_matrix_market(const std::string& path);

/// Writes coordinate format with %.17g values. `symmetric` stores the lower
/// triangle only; the matrix must then be symmetric. Uses the real field
/// when every imaginary part is zero.
void write_matrix_market(const std::string& path, const SparseMatrix& A, bool symmetric = false);

}  // namespace ilan
