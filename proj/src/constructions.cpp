#include "cyclemat/constructions.hpp"

#include <set>
#include <string>

#include "cyclemat/action.hpp"

namespace cyclemat {

namespace {

// Constructors are total: either a validated matrix or a ConstructionError.
// An invalid result here would be a bug in the construction itself.
CycleMatrix finish(Matrix m, const char *what)
{
  auto report = validate(m);
  if (!report.valid)
    throw std::logic_error(std::string("internal error: ") + what +
                           " produced an invalid matrix: " + report.describe());
  return CycleMatrix::assume_valid(std::move(m));
}

bool is_trivial(const CycleMatrix &m)
{
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      if (m.at(i, j) != j)
        return false;
  return true;
}

void require_automorphism(const Permutation &alpha, const CycleMatrix &m, const std::string &name)
{
  if (alpha.degree() != m.order())
    throw ConstructionError(name + " has degree " + std::to_string(alpha.degree()) +
                            ", expected " + std::to_string(m.order()));
  if (auto i = automorphism_witness(alpha, m))
    throw ConstructionError(name + " is not an automorphism: alpha*psi_i != psi_alpha(i)*alpha at i = " +
                            std::to_string(*i + 1));
}

bool commute(const Permutation &a, const Permutation &b) { return a * b == b * a; }

} // namespace

Matrix assemble_blocks(const BlockAssembly &spec)
{
  std::size_t blocks = spec.diagonal.size();
  if (blocks == 0)
    throw ConstructionError("block assembly needs at least one diagonal block");
  std::vector<std::size_t> offset(blocks + 1, 0);
  for (std::size_t b = 0; b < blocks; ++b) {
    if (spec.diagonal[b].order() == 0)
      throw ConstructionError("diagonal block " + std::to_string(b + 1) + " is empty");
    offset[b + 1] = offset[b] + spec.diagonal[b].order();
  }
  std::size_t n = offset[blocks];
  Matrix m(n);

  auto block_of = [&](std::size_t x) {
    std::size_t b = 0;
    while (offset[b + 1] <= x)
      ++b;
    return b;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t bi = block_of(i), bj = block_of(j);
      if (bi == bj)
        m.at(i, j) = static_cast<Label>(spec.diagonal[bi].at(i - offset[bi], j - offset[bj]) +
                                        offset[bj]);
      else
        m.at(i, j) = static_cast<Label>(j);
    }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto const &blk : spec.off_diagonal) {
    std::string where = "block (" + std::to_string(blk.row_block + 1) + "," +
                        std::to_string(blk.col_block + 1) + ")";
    if (blk.row_block >= blocks || blk.col_block >= blocks || blk.row_block == blk.col_block)
      throw ConstructionError(where + " is not an off-diagonal block");
    if (!seen.insert({blk.row_block, blk.col_block}).second)
      throw ConstructionError(where + " given twice");
    std::size_t rows = spec.diagonal[blk.row_block].order();
    std::size_t cols = spec.diagonal[blk.col_block].order();
    if (blk.rows.size() != 1 && blk.rows.size() != rows)
      throw ConstructionError(where + ": expected 1 or " + std::to_string(rows) +
                              " row permutations");
    for (std::size_t r = 0; r < rows; ++r) {
      const Permutation &p = blk.rows.size() == 1 ? blk.rows[0] : blk.rows[r];
      if (p.degree() != cols)
        throw ConstructionError(where + ", row " + std::to_string(r + 1) +
                                ": permutation moves labels outside the block (degree " +
                                std::to_string(p.degree()) + ", block size " +
                                std::to_string(cols) + ")");
      for (std::size_t c = 0; c < cols; ++c)
        m.at(offset[blk.row_block] + r, offset[blk.col_block] + c) =
            static_cast<Label>(p(static_cast<Label>(c)) + offset[blk.col_block]);
    }
  }
  return m;
}

CycleMatrix tensor(const CycleMatrix &a, const CycleMatrix &b)
{
  std::size_t na = a.order(), nb = b.order();
  Matrix m(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          m.at(i * nb + j, k * nb + l) = static_cast<Label>(a.at(i, k) * nb + b.at(j, l));
  return finish(std::move(m), "tensor");
}

CycleMatrix partitioned_construction(const CycleMatrix &x1, const CycleMatrix &x2,
                                     std::span<const std::size_t> partition,
                                     std::span<const Permutation> block_alpha1,
                                     std::span<const Permutation> block_alpha2)
{
  if (!is_trivial(x1) || !is_trivial(x2))
    throw ConstructionError("partitioned construction needs trivial factors");
  std::size_t k1 = x1.order(), k2 = x2.order();
  std::size_t blocks = partition.size();
  if (block_alpha1.size() != blocks || block_alpha2.size() != blocks)
    throw ConstructionError("expected one alpha1 and one alpha2 per partition block");

  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    if (partition[b] == 0)
      throw ConstructionError("partition block " + std::to_string(b + 1) + " is empty");
    covered += partition[b];
    if (block_alpha1[b].degree() != partition[b])
      throw ConstructionError("alpha1 of block " + std::to_string(b + 1) +
                              " must permute exactly the " + std::to_string(partition[b]) +
                              " labels of its block");
    if (block_alpha2[b].degree() != k2)
      throw ConstructionError("alpha2 of block " + std::to_string(b + 1) + " has degree " +
                              std::to_string(block_alpha2[b].degree()) + ", expected " +
                              std::to_string(k2));
  }
  if (covered != k1)
    throw ConstructionError("partition covers " + std::to_string(covered) +
                            " labels, first factor has " + std::to_string(k1));

  for (std::size_t i = 0; i < blocks; ++i)
    for (std::size_t j = i + 1; j < blocks; ++j)
      if (!commute(block_alpha2[i], block_alpha2[j]))
        throw ConstructionError("alpha2 of blocks " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " do not commute");

  OffDiagonalBlock top{0, 1, {}};
  std::vector<Label> bottom(k1);
  std::size_t start = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t r = 0; r < partition[b]; ++r) {
      top.rows.push_back(block_alpha2[b]);
      bottom[start + r] = static_cast<Label>(start + block_alpha1[b](static_cast<Label>(r)));
    }
    start += partition[b];
  }
  OffDiagonalBlock lower{1, 0, {Permutation(std::move(bottom))}};

  return finish(assemble_blocks({{x1.matrix(), x2.matrix()}, {std::move(top), std::move(lower)}}),
                "partitioned construction");
}

CycleMatrix abelian_solution(std::span<const Permutation> generators, std::size_t degree)
{
  if (degree == 0)
    throw ConstructionError("abelian construction needs a positive degree");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].degree() != degree)
      throw ConstructionError("generator " + std::to_string(i + 1) + " has degree " +
                              std::to_string(generators[i].degree()) + ", expected " +
                              std::to_string(degree));
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commute(generators[i], generators[j]))
        throw ConstructionError("generators " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " do not commute");
  if (generators.empty())
    return trivial_solution(degree);

  std::size_t k = generators.size();
  std::vector<std::size_t> singletons(k, 1);
  std::vector<Permutation> fixed(k, Permutation::identity(1));
  return partitioned_construction(trivial_solution(k), trivial_solution(degree), singletons,
                                  fixed, generators);
}

CycleMatrix union2(const CycleMatrix &x1, const CycleMatrix &x2, const Permutation &alpha1,
                   const Permutation &alpha2)
{
  require_automorphism(alpha1, x1, "alpha1");
  require_automorphism(alpha2, x2, "alpha2");
  return finish(assemble_blocks({{x1.matrix(), x2.matrix()}, {{0, 1, {alpha2}}, {1, 0, {alpha1}}}}),
                "union");
}

namespace {

Permutation default_cumulative(const CycleMatrix &partial)
{
  for (auto const &a : automorphisms(partial))
    if (!a.is_identity())
      return a;
  return Permutation::identity(partial.order());
}

CycleMatrix fold_unions(std::span<const CycleMatrix> factors, std::span<const Permutation> alphas,
                        std::span<const std::optional<Permutation>> cumulative, std::size_t count)
{
  if (factors.size() < 2)
    throw ConstructionError("iterated union needs at least two factors");
  if (alphas.size() != factors.size())
    throw ConstructionError("expected one alpha per factor");
  if (cumulative.size() > factors.size() - 2)
    throw ConstructionError("expected at most " + std::to_string(factors.size() - 2) +
                            " cumulative automorphisms");

  auto stage = [](std::size_t t) { return "stage " + std::to_string(t) + ": "; };
  auto with_stage = [&](std::size_t t, auto &&build) {
    try {
      return build();
    } catch (const ConstructionError &e) {
      throw ConstructionError(stage(t) + e.what());
    }
  };

  CycleMatrix acc = with_stage(2, [&] { return union2(factors[0], factors[1], alphas[0], alphas[1]); });
  for (std::size_t t = 2; t < count; ++t) {
    const auto &given = t - 2 < cumulative.size() ? cumulative[t - 2] : std::nullopt;
    Permutation cum = given ? *given : default_cumulative(acc);
    acc = with_stage(t + 1, [&] {
      require_automorphism(cum, acc, "cumulative automorphism of the first " + std::to_string(t) +
                                         " factors");
      return union2(acc, factors[t], cum, alphas[t]);
    });
  }
  return acc;
}

} // namespace

CycleMatrix union_iterated(std::span<const CycleMatrix> factors,
                           std::span<const Permutation> alphas,
                           std::span<const std::optional<Permutation>> cumulative)
{
  return fold_unions(factors, alphas, cumulative, factors.size());
}

CycleMatrix partial_union(std::span<const CycleMatrix> factors,
                          std::span<const Permutation> alphas,
                          std::span<const std::optional<Permutation>> cumulative,
                          std::size_t count)
{
  if (count < 2 || count > factors.size())
    throw ConstructionError("partial union size out of range");
  return fold_unions(factors, alphas, cumulative, count);
}

CycleMatrix theta_construction(std::span<const CycleMatrix> factors,
                               std::span<const Permutation> alphas, const Permutation &theta)
{
  std::size_t k = factors.size();
  if (k == 0)
    throw ConstructionError("theta construction needs at least one factor");
  if (alphas.size() != k)
    throw ConstructionError("expected one alpha per factor");
  if (theta.degree() != k)
    throw ConstructionError("theta has degree " + std::to_string(theta.degree()) + ", expected " +
                            std::to_string(k));
  BlockAssembly spec;
  for (std::size_t mu = 0; mu < k; ++mu) {
    require_automorphism(alphas[mu], factors[mu], "alpha" + std::to_string(mu + 1));
    spec.diagonal.push_back(factors[mu].matrix());
  }
  for (std::size_t mu = 0; mu < k; ++mu) {
    std::size_t nu = theta(static_cast<Label>(mu));
    if (nu != mu)
      spec.off_diagonal.push_back({mu, nu, {alphas[nu]}});
  }
  return finish(assemble_blocks(spec), "theta construction");
}

Permutation tower_swap(std::size_t m)
{
  if (m == 0 || m > max_tower_height)
    throw ConstructionError("tower height out of range");
  std::size_t n = std::size_t{1} << m, half = n / 2;
  std::vector<Label> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Label>(i < half ? i + half : i - half);
  return Permutation(std::move(images));
}

CycleMatrix multiperm_tower(std::size_t m)
{
  if (m == 0 || m > max_tower_height)
    throw ConstructionError("tower height must be in 1.." + std::to_string(max_tower_height));
  CycleMatrix x = trivial_solution(2);
  for (std::size_t k = 1; k < m; ++k) {
    Permutation s = tower_swap(k);
    x = union2(x, x, s, s);
  }
  return x;
}

} // namespace cyclemat
