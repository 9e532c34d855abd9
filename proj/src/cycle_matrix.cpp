#include "cyclemat/cycle_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace cyclemat {

InvalidCycleMatrix::InvalidCycleMatrix(ValidationReport report)
: std::invalid_argument("not a cycle matrix: " + report.describe()),
  report_(std::move(report))
{}

CycleMatrix::CycleMatrix(Matrix m)
: m_(std::move(m))
{
  if (m_.order() == 0)
    throw InputError("cycle matrix must have positive order");
  auto report = validate(m_);
  if (!report.valid)
    throw InvalidCycleMatrix(std::move(report));
}

CycleMatrix CycleMatrix::from_rows(const std::vector<std::vector<int>> &rows)
{
  return CycleMatrix(Matrix::from_rows(rows));
}

CycleMatrix CycleMatrix::assume_valid(Matrix m)
{
  assert(validate(m).valid);
  return CycleMatrix(std::move(m), Unchecked{});
}

Permutation CycleMatrix::row(std::size_t i) const
{
  if (i >= order())
    throw std::out_of_range("row index " + std::to_string(i) + " out of range");
  auto r = m_.row(i);
  return Permutation(std::vector<Label>(r.begin(), r.end()));
}

Permutation CycleMatrix::diagonal() const
{
  std::vector<Label> d(order());
  for (std::size_t i = 0; i < order(); ++i)
    d[i] = m_.at(i, i);
  return Permutation(std::move(d));
}

bool CycleMatrix::is_square_free() const
{
  for (std::size_t i = 0; i < order(); ++i)
    if (m_.at(i, i) != i)
      return false;
  return true;
}

bool CycleMatrix::is_permutation_solution() const
{
  auto first = m_.row(0);
  for (std::size_t i = 1; i < order(); ++i) {
    auto r = m_.row(i);
    if (!std::equal(first.begin(), first.end(), r.begin()))
      return false;
  }
  return true;
}

CycleMatrix permutation_solution(const Permutation &sigma)
{
  std::size_t n = sigma.degree();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = sigma(static_cast<Label>(j));
  return CycleMatrix::assume_valid(std::move(m));
}

CycleMatrix trivial_solution(std::size_t n)
{
  return permutation_solution(Permutation::identity(n));
}

} // namespace cyclemat
