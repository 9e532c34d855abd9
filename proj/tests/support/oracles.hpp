// Brute-force reference implementations. They work on plain 0-based
// vectors and share no code with the library beyond the types used to
// compare results.
#ifndef CYCLEMAT_TESTS_ORACLES_HPP
#define CYCLEMAT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cyclemat/io.hpp"
#include "cyclemat/matrix.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>; // 0-based
using Perm = std::vector<int>;               // 0-based images

inline bool is_bijection(const std::vector<int> &v)
{
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] != i)
      return false;
  return true;
}

// Direct reading of the definition: left translations bijective, squaring
// bijective, (x.y).(x.z) = (y.x).(y.z) for all x, y, z.
inline bool is_cycle_set(const Table &t)
{
  int n = static_cast<int>(t.size());
  for (auto const &row : t)
    if (!is_bijection(row))
      return false;
  std::vector<int> sq(n);
  for (int x = 0; x < n; ++x)
    sq[x] = t[x][x];
  if (!is_bijection(sq))
    return false;
  auto mul = [&](int a, int b) { return t[a][b]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul(mul(x, y), mul(x, z)) != mul(mul(y, x), mul(y, z)))
          return false;
  return true;
}

inline std::vector<Perm> permutations(int n)
{
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every n-tuple of row permutations, kept when it satisfies the definition.
inline std::set<Table> naive_enumeration(int n)
{
  auto perms = permutations(n);
  std::set<Table> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Table t;
    for (int i = 0; i < n; ++i)
      t.push_back(perms[pick[i]]);
    if (is_cycle_set(t))
      out.insert(t);
    int pos = n - 1;
    while (pos >= 0 && ++pick[pos] == perms.size())
      pick[pos--] = 0;
    if (pos < 0)
      break;
  }
  return out;
}

// (s M)_{ij} = s(M[s^-1 i][s^-1 j])
inline Table act(const Perm &s, const Table &t)
{
  int n = static_cast<int>(t.size());
  Perm inv(n);
  for (int i = 0; i < n; ++i)
    inv[s[i]] = i;
  Table out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[i][j] = s[t[inv[i]][inv[j]]];
  return out;
}

inline Table least_in_orbit(const Table &t)
{
  Table best = t;
  for (auto const &s : permutations(static_cast<int>(t.size())))
    best = std::min(best, act(s, t));
  return best;
}

inline std::vector<Perm> stabilizer(const Table &t)
{
  std::vector<Perm> out;
  for (auto const &s : permutations(static_cast<int>(t.size())))
    if (act(s, t) == t)
      out.push_back(s);
  return out;
}

inline std::size_t orbit_size(const Table &t)
{
  std::set<Table> orbit;
  for (auto const &s : permutations(static_cast<int>(t.size())))
    orbit.insert(act(s, t));
  return orbit.size();
}

inline std::size_t centralizer_order(const Perm &sigma)
{
  std::size_t count = 0;
  int n = static_cast<int>(sigma.size());
  for (auto const &a : permutations(n)) {
    bool commutes = true;
    for (int x = 0; x < n && commutes; ++x)
      commutes = a[sigma[x]] == sigma[a[x]];
    count += commutes;
  }
  return count;
}

// Partitions of n into parts of size at most k.
inline std::uint64_t partition_count(int n, int k)
{
  if (n == 0)
    return 1;
  if (k == 0)
    return 0;
  return partition_count(n, k - 1) + (k <= n ? partition_count(n - k, k) : 0);
}

inline std::uint64_t partition_count(int n) { return partition_count(n, n); }

inline Table table(const cyclemat::Matrix &m)
{
  Table t(m.order(), std::vector<int>(m.order()));
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      t[i][j] = m.at(i, j);
  return t;
}

inline cyclemat::Matrix matrix(const Table &t)
{
  cyclemat::Matrix m(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      m.at(i, j) = static_cast<cyclemat::Label>(t[i][j]);
  return m;
}

} // namespace oracle

namespace fixtures {

inline cyclemat::Matrix load(const std::string &name)
{
  return cyclemat::read_matrix_file(std::string(CYCLEMAT_FIXTURE_DIR) + "/" + name + ".txt");
}

inline std::string path(const std::string &name)
{
  return std::string(CYCLEMAT_FIXTURE_DIR) + "/" + name + ".txt";
}

} // namespace fixtures

#endif // CYCLEMAT_TESTS_ORACLES_HPP
