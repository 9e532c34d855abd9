#ifndef CYCLEMAT_STRUCTURE_HPP
#define CYCLEMAT_STRUCTURE_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclemat/cycle_matrix.hpp"

namespace cyclemat {

using BigInt = boost::multiprecision::cpp_int;

/// Orbits of the group generated by the rows, each sorted, ordered by least
/// member.
std::vector<std::vector<Label>> point_orbits(const CycleMatrix &m);

/// More than one orbit.
bool is_decomposable(const CycleMatrix &m);

inline constexpr std::size_t default_group_limit = 1'000'000;

/// Closure of the rows under composition, sorted. nullopt once more than
/// `limit` elements have been generated.
std::optional<std::vector<Permutation>> permutation_group(const CycleMatrix &m,
                                                          std::size_t limit = default_group_limit);

/// Exact determinant of the table read with 1-based entries, by
/// fraction-free elimination.
BigInt determinant(const Matrix &m);

inline BigInt determinant(const CycleMatrix &m) { return determinant(m.matrix()); }

/// The transpose is again a cycle matrix.
bool is_transpose_cycle_matrix(const CycleMatrix &m);

/// Equivalent criterion checked directly on m: every column is a bijection
/// and (z.x).(y.x) = (z.y).(x.y) for all x, y, z.
bool transpose_conditions_hold(const CycleMatrix &m);

} // namespace cyclemat

#endif // CYCLEMAT_STRUCTURE_HPP
