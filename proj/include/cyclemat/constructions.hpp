#ifndef CYCLEMAT_CONSTRUCTIONS_HPP
#define CYCLEMAT_CONSTRUCTIONS_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cyclemat/cycle_matrix.hpp"
#include "cyclemat/permutation.hpp"

namespace cyclemat {

/// A construction precondition does not hold (non-automorphism, non-commuting
/// pair, size mismatch, ...). The message names the offending item.
class ConstructionError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Block of rows of factor `row_block` restricted to the columns of factor
/// `col_block` (both 0-based). Row r of that block reads
/// `rows[r](local column) + offset(col_block)`. A single permutation stands
/// for every row of the block.
struct OffDiagonalBlock
{
  std::size_t row_block = 0;
  std::size_t col_block = 0;
  std::vector<Permutation> rows;
};

/// Block layout: diagonal blocks are the factor tables (local labels, shifted
/// by the block offset); unspecified off-diagonal blocks are identities.
struct BlockAssembly
{
  std::vector<Matrix> diagonal;
  std::vector<OffDiagonalBlock> off_diagonal;
};

/// Builds the block matrix. No validity promise; callers validate.
/// Throws ConstructionError when a permutation does not act on the labels of
/// its column block or a block is listed twice.
Matrix assemble_blocks(const BlockAssembly &spec);

/// Product cycle set, point (i, j) relabeled as i * order(b) + j.
CycleMatrix tensor(const CycleMatrix &a, const CycleMatrix &b);

/// Two trivial factors of orders k1 and k2. `partition` lists contiguous
/// block sizes of the first factor; block i carries `block_alpha1[i]` on its
/// own local labels and `block_alpha2[i]` on the second factor's labels. The
/// `block_alpha2` must commute pairwise.
CycleMatrix partitioned_construction(const CycleMatrix &x1, const CycleMatrix &x2,
                                     std::span<const std::size_t> partition,
                                     std::span<const Permutation> block_alpha1,
                                     std::span<const Permutation> block_alpha2);

/// Solution of order generators.size() + degree whose permutation group acts
/// as <generators> on the last `degree` points. Generators must commute.
CycleMatrix abelian_solution(std::span<const Permutation> generators, std::size_t degree);

/// [x1 | alpha2; alpha1 | x2] with alpha_i in Aut(x_i).
CycleMatrix union2(const CycleMatrix &x1, const CycleMatrix &x2, const Permutation &alpha1,
                   const Permutation &alpha2);

/// Left fold of union2. `cumulative[t - 2]` is the automorphism of the union of
/// the first t factors that labels the rows of factor t + 1, for
/// t = 2 .. factors.size() - 1. A missing entry is filled with the least
/// non-identity automorphism of that partial union (identity if none).
CycleMatrix union_iterated(std::span<const CycleMatrix> factors,
                           std::span<const Permutation> alphas,
                           std::span<const std::optional<Permutation>> cumulative);

/// Union of the first `count` factors, i.e. the matrix whose automorphisms
/// are candidates for cumulative[count - 2].
CycleMatrix partial_union(std::span<const CycleMatrix> factors,
                          std::span<const Permutation> alphas,
                          std::span<const std::optional<Permutation>> cumulative,
                          std::size_t count);

/// Block (mu, mu) is factor mu; block (mu, nu) is alpha_nu when
/// theta(mu) = nu != mu and the identity otherwise.
CycleMatrix theta_construction(std::span<const CycleMatrix> factors,
                               std::span<const Permutation> alphas, const Permutation &theta);

/// Product of the transpositions (i, i + 2^(m-1)) on 2^m points.
Permutation tower_swap(std::size_t m);

/// Order 2^m solution of multipermutation level m: the 2 x 2 trivial solution
/// for m = 1, then repeated union2 with tower_swap on both sides.
CycleMatrix multiperm_tower(std::size_t m);

inline constexpr std::size_t max_tower_height = 10;

} // namespace cyclemat

#endif // CYCLEMAT_CONSTRUCTIONS_HPP
