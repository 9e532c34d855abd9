#include "cyclemat/matrix.hpp"

#include <limits>

namespace cyclemat {

Matrix::Matrix(std::size_t n)
: n_(n), entries_(n * n, Label{0})
{
  if (n > std::numeric_limits<Label>::max())
    throw InputError("matrix order " + std::to_string(n) + " is too large");
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>> &rows)
{
  std::size_t n = rows.size();
  if (n == 0)
    throw InputError("empty matrix");
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw InputError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw InputError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") = " + std::to_string(v) + " out of range 1.." +
                         std::to_string(n));
      m.at(i, j) = static_cast<Label>(v - 1);
    }
  }
  return m;
}

std::vector<std::vector<int>> Matrix::rows() const
{
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      out[i][j] = at(i, j) + 1;
  return out;
}

Matrix Matrix::transposed() const
{
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      t.at(j, i) = at(i, j);
  return t;
}

std::string to_string(Axiom axiom)
{
  switch (axiom) {
  case Axiom::RowBijectivity:
    return "row-bijectivity";
  case Axiom::DiagonalBijectivity:
    return "diagonal-bijectivity";
  case Axiom::Cycloid:
    return "cycloid";
  }
  return "unknown";
}

std::string ValidationReport::describe() const
{
  if (valid)
    return "valid";
  std::string s = "invalid: " + to_string(violation->axiom) + " violated at (";
  for (std::size_t k = 0; k < violation->witness.size(); ++k) {
    if (k)
      s += ',';
    s += std::to_string(violation->witness[k]);
  }
  return s + ")";
}

ValidationReport validate(const Matrix &m)
{
  std::size_t n = m.order();
  for (Label v : m.entries())
    if (v >= n)
      throw InputError("entry " + std::to_string(v + 1) + " out of range 1.." +
                       std::to_string(n));

  auto fail = [](Axiom axiom, std::vector<int> witness) {
    return ValidationReport{false, Violation{axiom, std::move(witness)}};
  };

  std::vector<int> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j)
      if (seen[m.at(i, j)]++)
        return fail(Axiom::RowBijectivity, {static_cast<int>(i + 1)});
  }

  // seen[v] holds 1 + the first point whose square is v
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    Label sq = m.at(j, j);
    if (seen[sq])
      return fail(Axiom::DiagonalBijectivity, {seen[sq], static_cast<int>(j + 1)});
    seen[sq] = static_cast<int>(j + 1);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Label ij = m.at(i, j), ji = m.at(j, i);
      for (std::size_t k = 0; k < n; ++k)
        if (m.at(ij, m.at(i, k)) != m.at(ji, m.at(j, k)))
          return fail(Axiom::Cycloid, {static_cast<int>(i + 1), static_cast<int>(j + 1),
                                       static_cast<int>(k + 1)});
    }

  return {};
}

ValidationReport validate(const std::vector<std::vector<int>> &rows)
{
  return validate(Matrix::from_rows(rows));
}

} // namespace cyclemat
