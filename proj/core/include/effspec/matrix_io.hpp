#ifndef EFFSPEC_MATRIX_IO_HPP
#define EFFSPEC_MATRIX_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "effspec/matrix.hpp"

namespace effspec {

inline constexpr std::size_t kMaxFileDimension = 64;

/// Plain-text matrix format:
///
///   # comment (a '#' starts a comment anywhere on a line)
///   2
///   0 1
///   1 0
///
/// The first non-blank, non-comment line holds n in [1, 64]; the next n such
/// lines hold n whitespace-separated decimal reals. Blank lines are ignored.
/// Throws ParseError with the offending line number.
Matrix parse_matrix(std::string_view text);

/// Reads and parses a file. Throws IoError if the file cannot be opened.
Matrix read_matrix_file(const std::filesystem::path& path);

/// Writes the matrix in the same format using shortest round-trip decimals,
/// so parse_matrix(format_matrix(m)) == m exactly.
std::string format_matrix(const Matrix& m);

/// Shortest decimal that parses back to exactly x.
std::string format_exact(double x);

/// Rounded to 12 digits after the decimal point, trailing zeros and a bare
/// decimal point dropped, negative zero printed as 0.
std::string format_fixed12(double x);

}  // namespace effspec

#endif  // EFFSPEC_MATRIX_IO_HPP
