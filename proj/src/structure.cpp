#include "cyclemat/structure.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <utility>

namespace cyclemat {

std::vector<std::vector<Label>> point_orbits(const CycleMatrix &m)
{
  std::size_t n = m.order();
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<Label>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (orbit_of[start] >= 0)
      continue;
    int id = static_cast<int>(orbits.size());
    std::vector<Label> orbit{static_cast<Label>(start)};
    orbit_of[start] = id;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      Label y = orbit[q];
      for (std::size_t x = 0; x < n; ++x) {
        Label z = m.at(x, y);
        if (orbit_of[z] < 0) {
          orbit_of[z] = id;
          orbit.push_back(z);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_decomposable(const CycleMatrix &m)
{
  return point_orbits(m).size() > 1;
}

std::optional<std::vector<Permutation>> permutation_group(const CycleMatrix &m,
                                                          std::size_t limit)
{
  std::set<Permutation> generators;
  for (std::size_t i = 0; i < m.order(); ++i)
    generators.insert(m.row(i));

  std::set<Permutation> elements{Permutation::identity(m.order())};
  std::deque<Permutation> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    Permutation g = std::move(frontier.front());
    frontier.pop_front();
    for (auto const &s : generators) {
      Permutation h = s * g;
      if (elements.insert(h).second) {
        if (elements.size() > limit)
          return std::nullopt;
        frontier.push_back(std::move(h));
      }
    }
  }
  return std::vector<Permutation>(elements.begin(), elements.end());
}

BigInt determinant(const Matrix &m)
{
  std::size_t n = m.order();
  if (n == 0)
    return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m.at(i, j) + 1;

  // Bareiss: after step k every entry below is an exact minor, so the
  // division by the previous pivot is exact.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool transpose_conditions_hold(const CycleMatrix &m)
{
  std::size_t n = m.order();
  std::vector<bool> seen(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[m.at(x, y)])
        return false;
      seen[m.at(x, y)] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (m.at(m.at(z, x), m.at(y, x)) != m.at(m.at(z, y), m.at(x, y)))
          return false;
  return true;
}

bool is_transpose_cycle_matrix(const CycleMatrix &m)
{
  bool result = validate(m.matrix().transposed()).valid;
  assert(result == transpose_conditions_hold(m));
  return result;
}

} // namespace cyclemat
