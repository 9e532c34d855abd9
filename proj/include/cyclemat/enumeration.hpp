#ifndef CYCLEMAT_ENUMERATION_HPP
#define CYCLEMAT_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cyclemat/cycle_matrix.hpp"

namespace cyclemat {

struct SearchStats
{
  std::uint64_t nodes = 0;  ///< rows accepted
  std::uint64_t prunes = 0; ///< candidate rows rejected

  SearchStats &operator+=(const SearchStats &o)
  {
    nodes += o.nodes;
    prunes += o.prunes;
    return *this;
  }
};

/// How isomorphic duplicates are removed.
enum class DedupMode
{
  Automatic,     ///< CanonicalKeys up to order 5, Orderly above
  CanonicalKeys, ///< canonical form of every raw matrix into a set
  Orderly,       ///< keep only matrices equal to their own canonical form
};

/// Streams every n x n cycle matrix exactly once in row-major lexicographic
/// order. `visit` returns false to stop early.
///
/// Rows are chosen one at a time among all permutations. A candidate row
/// must agree with entries already forced by the cycloid relation, keep the
/// diagonal injective and keep m[i][j] != m[j][i]; placing it checks every
/// cycloid triple it completes and forces entries of rows not yet chosen.
SearchStats for_each_cycle_matrix(std::size_t n,
                                  const std::function<bool(const CycleMatrix &)> &visit);

std::vector<CycleMatrix> enumerate_raw(std::size_t n);

struct ClassEnumeration
{
  std::size_t n = 0;
  std::vector<CycleMatrix> classes; ///< canonical representatives, ascending
  std::uint64_t raw_count = 0;
  SearchStats stats;
};

/// One canonical representative per isomorphism class, ascending. The
/// search tree is split into subtrees at the first rows and shared among
/// `jobs` threads; output and statistics do not depend on `jobs`.
ClassEnumeration enumerate_classes(std::size_t n, std::size_t jobs = 1,
                                   DedupMode mode = DedupMode::Automatic);

struct EnumFilter
{
  std::optional<bool> square_free;
  std::optional<bool> indecomposable;
  std::optional<bool> transpose;
  std::optional<std::size_t> max_level;
  std::optional<bool> permutation_only;

  bool matches(const CycleMatrix &m) const;
  nlohmann::json to_json() const;
};

struct CensusReport
{
  std::size_t n = 0;
  std::uint64_t raw_count = 0;
  std::uint64_t iso_count = 0;
  /// Classes passing each set filter field on its own, in declaration order.
  std::vector<std::pair<std::string, std::uint64_t>> filter_counts;
  /// Classes passing every set field.
  std::uint64_t matching_count = 0;
  EnumFilter filter;
  SearchStats stats;
  std::vector<CycleMatrix> matching;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

CensusReport census(std::size_t n, const EnumFilter &filter = {}, std::size_t jobs = 1,
                    DedupMode mode = DedupMode::Automatic);

} // namespace cyclemat

#endif // CYCLEMAT_ENUMERATION_HPP
