#ifndef CYCLEMAT_MATRIX_HPP
#define CYCLEMAT_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclemat/permutation.hpp"

namespace cyclemat {

/// Malformed input: non-square data, entry out of range, unparsable text.
/// The message carries the offending position.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Square table of labels with no algebraic promise attached.
///
/// Entries are stored 0-based and row-major. Ordering compares the order
/// first, then entries in row-major order, so for equal orders `<` is the
/// lexicographic order used by canonical forms and enumeration.
class Matrix
{
public:
  Matrix() = default;

  /// n x n table filled with label 0.
  explicit Matrix(std::size_t n);

  /// 1-based rows. Throws InputError when the data is not square or an entry
  /// lies outside 1..n.
  static Matrix from_rows(const std::vector<std::vector<int>> &rows);

  std::size_t order() const { return n_; }

  Label at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Label &at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::span<const Label> row(std::size_t i) const
  {
    return {entries_.data() + i * n_, n_};
  }

  std::span<const Label> entries() const { return entries_; }

  /// 1-based copy of the rows.
  std::vector<std::vector<int>> rows() const;

  Matrix transposed() const;

  auto operator<=>(const Matrix &) const = default;

private:
  std::size_t n_ = 0;
  std::vector<Label> entries_;
};

enum class Axiom
{
  RowBijectivity,
  DiagonalBijectivity,
  Cycloid,
};

std::string to_string(Axiom axiom);

struct Violation
{
  Axiom axiom;
  /// 1-based: {i} for a row, {i, j} for two points with equal squares,
  /// {i, j, k} for a failing cycloid triple.
  std::vector<int> witness;
};

struct ValidationReport
{
  bool valid = true;
  std::optional<Violation> violation;

  std::string describe() const;
};

/// Checks the cycle-matrix axioms and reports the first violation, scanning
/// rows, then the diagonal, then cycloid triples (i, j, k) ascending.
/// Throws InputError if some entry is not a label of the matrix.
ValidationReport validate(const Matrix &m);

/// Same as validate() for raw 1-based rows; malformed rows throw InputError.
ValidationReport validate(const std::vector<std::vector<int>> &rows);

} // namespace cyclemat

#endif // CYCLEMAT_MATRIX_HPP
