#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>

namespace edmsphere {

/// Text format: first line `n`, then n rows of n whitespace-separated
/// decimals. `#` starts a comment running to end of line. Throws ParseError
/// with the offending line number.
Eigen::MatrixXd parse_matrix_text(std::string_view text);

/// JSON format: {"n": int, "rows": [[...], ...]}.
Eigen::MatrixXd parse_matrix_json(std::string_view text);

/// Dispatches on the first non-blank character: `{` means JSON.
Eigen::MatrixXd parse_matrix(std::string_view text);

/// Text format with 17 significant digits per entry.
std::string format_matrix_text(const Eigen::MatrixXd& m);

/// `%.17g`: 17 significant digits, trailing zeros dropped.
std::string format_double(double v);

std::string read_file(const std::string& path);

}  // namespace edmsphere
