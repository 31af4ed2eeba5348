#pragma once

#include <string>

#include "nradius/types.hpp"

namespace nradius {

enum class MatrixFormat { Json, MatrixMarket };

/// JSON schema: {"rows": R, "cols": C, "data": [[re, im], ...]} row-major.
/// Matrix Market: array and coordinate forms, real/complex/integer fields,
/// general/symmetric/hermitian/skew-symmetric symmetry; coordinate entries
/// are densified. Parse failures raise ParseError with line/column.
ComplexMatrix read_matrix(const std::string& path, MatrixFormat format);

/// Format inferred from extension: .json -> Json, .mtx/.mm -> MatrixMarket.
ComplexMatrix read_matrix_auto(const std::string& path);

/// Writers round-trip bit-exactly (floats rendered with 17 significant digits).
void write_matrix(const ComplexMatrix& m, const std::string& path, MatrixFormat format);

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

/// 17-significant-digit float rendering used by all file emitters.
std::string format_g17(double v);

/// 12-significant-digit rendering used by the CLI.
std::string format_g12(double v);

/// Fixed 12-decimal rendering used in reproduction tables.
std::string format_f12(double v);

}  // namespace nradius
