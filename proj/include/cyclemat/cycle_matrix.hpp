#ifndef CYCLEMAT_CYCLE_MATRIX_HPP
#define CYCLEMAT_CYCLE_MATRIX_HPP

#include <compare>
#include <stdexcept>
#include <vector>

#include "cyclemat/matrix.hpp"
#include "cyclemat/permutation.hpp"

namespace cyclemat {

/// Thrown when a table handed to CycleMatrix fails an axiom.
class InvalidCycleMatrix : public std::invalid_argument
{
public:
  explicit InvalidCycleMatrix(ValidationReport report);

  const ValidationReport &report() const { return report_; }

private:
  ValidationReport report_;
};

/// Multiplication table of a non-degenerate cycle set on {0, ..., n-1},
/// entry (i, j) being i . j.
///
/// Every value of this type satisfies the axioms: the public constructors
/// validate, and the only way around that is `assume_valid`, reserved for
/// code paths whose output is valid by construction.
class CycleMatrix
{
public:
  explicit CycleMatrix(Matrix m);

  static CycleMatrix from_rows(const std::vector<std::vector<int>> &rows);

  /// Skips validation (checked with assert in debug builds).
  static CycleMatrix assume_valid(Matrix m);

  const Matrix &matrix() const { return m_; }
  std::size_t order() const { return m_.order(); }
  Label at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

  /// Left translation y -> i . y. Throws std::out_of_range for a bad index.
  Permutation row(std::size_t i) const;

  /// The squaring map x -> x . x.
  Permutation diagonal() const;

  bool is_square_free() const;

  /// All rows coincide.
  bool is_permutation_solution() const;

  std::vector<std::vector<int>> rows() const { return m_.rows(); }

  auto operator<=>(const CycleMatrix &) const = default;

private:
  struct Unchecked
  {
  };
  CycleMatrix(Matrix m, Unchecked)
  : m_(std::move(m))
  {}

  Matrix m_;
};

/// Every row equal to sigma.
CycleMatrix permutation_solution(const Permutation &sigma);

CycleMatrix trivial_solution(std::size_t n);

} // namespace cyclemat

#endif // CYCLEMAT_CYCLE_MATRIX_HPP
