#ifndef CYCLEMAT_IO_HPP
#define CYCLEMAT_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cyclemat/matrix.hpp"
#include "cyclemat/permutation.hpp"

namespace cyclemat {

// Text format: first line n, then n lines of n space-separated labels in 1..n.
// JSON format: {"n": n, "rows": [[...], ...]}.
// Parse failures throw InputError naming the line/row and column.

Matrix parse_matrix_text(std::string_view text);

Matrix parse_matrix_json(const nlohmann::json &j);

/// Dispatches on the first non-blank character ('{' means JSON).
Matrix parse_matrix(std::string_view text);

Matrix read_matrix_file(const std::filesystem::path &path);

std::string format_matrix(const Matrix &m);

nlohmann::json matrix_to_json(const Matrix &m);

/// Comma separated 1-based image list, "2,1,3".
Permutation parse_permutation(std::string_view text);

nlohmann::json permutation_to_json(const Permutation &p);

Permutation permutation_from_json(const nlohmann::json &j);

} // namespace cyclemat

#endif // CYCLEMAT_IO_HPP
