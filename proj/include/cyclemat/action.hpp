#ifndef CYCLEMAT_ACTION_HPP
#define CYCLEMAT_ACTION_HPP

#include <optional>
#include <vector>

#include "cyclemat/cycle_matrix.hpp"
#include "cyclemat/permutation.hpp"

namespace cyclemat {

/// Relabels by sigma: entry (i, j) of the result is
/// sigma(m[sigma^-1(i)][sigma^-1(j)]). Isomorphic matrices on the same
/// labels are exactly the orbits of this action.
CycleMatrix act(const Permutation &sigma, const CycleMatrix &m);

/// Same relabeling on an arbitrary table.
Matrix act(const Permutation &sigma, const Matrix &m);

struct CanonicalForm
{
  CycleMatrix matrix;
  /// act(labeling, input) == matrix.
  Permutation labeling;
};

/// Lexicographically least matrix (row-major) in the orbit of m.
///
/// Backtracks over the labeling of the first row only: once row one of the
/// result is fixed, every label is fixed. The first point is restricted to
/// rows of minimal cycle type, and ties between points exchanged by a
/// transposition automorphism are explored once.
CanonicalForm canonical_form(const CycleMatrix &m);

/// Sorted row cycle types; an isomorphism invariant.
std::vector<CycleType> row_cycle_types(const CycleMatrix &m);

/// sigma with act(sigma, a) == b, if any. Matrices of different order are
/// never isomorphic.
std::optional<Permutation> are_isomorphic(const CycleMatrix &a, const CycleMatrix &b);

/// The full stabilizer {alpha : act(alpha, m) == m}, sorted.
std::vector<Permutation> automorphisms(const CycleMatrix &m);

/// Size of the stabilizer without materializing it.
std::size_t automorphism_count(const CycleMatrix &m);

/// First row index i with alpha * psi_i != psi_{alpha(i)} * alpha, or nullopt
/// when alpha is an automorphism. Throws std::invalid_argument on a degree
/// mismatch.
std::optional<Label> automorphism_witness(const Permutation &alpha, const CycleMatrix &m);

inline bool is_automorphism(const Permutation &alpha, const CycleMatrix &m)
{
  return !automorphism_witness(alpha, m).has_value();
}

} // namespace cyclemat

#endif // CYCLEMAT_ACTION_HPP
