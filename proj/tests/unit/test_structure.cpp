#include "doctest.h"

#include "cyclemat/action.hpp"
#include "cyclemat/constructions.hpp"
#include "cyclemat/enumeration.hpp"
#include "cyclemat/retraction.hpp"
#include "cyclemat/structure.hpp"
#include "oracles.hpp"

using namespace cyclemat;

TEST_CASE("retraction of the tower")
{
  auto x8 = CycleMatrix(fixtures::load("tower_eight"));
  auto chain = retraction_chain(x8);
  REQUIRE(chain.stages.size() == 4);
  CHECK(chain.stages[1].matrix() == fixtures::load("tower_four"));
  CHECK(chain.stages[2] == trivial_solution(2));
  CHECK(chain.stages[3].order() == 1);
  CHECK(chain.outcome == RetractionChain::Outcome::Terminates);
  CHECK(chain.level() == 3u);
  CHECK(multipermutation_level(x8) == 3u);
  CHECK(chain.class_maps[0] == std::vector<Label>{0, 0, 1, 1, 2, 2, 3, 3});
}

TEST_CASE("retraction of permutation solutions")
{
  for (std::size_t n = 2; n <= 5; ++n)
    for (auto const &s : all_permutations(n)) {
      auto r = retract_once(permutation_solution(s));
      CHECK(r.quotient.order() == 1);
      CHECK(r.class_map == std::vector<Label>(n, 0));
      CHECK(multipermutation_level(permutation_solution(s)) == 1u);
    }
  CHECK(multipermutation_level(trivial_solution(1)) == 0u);
  CHECK(retraction_chain(trivial_solution(1)).stages.size() == 1);
}

TEST_CASE("irretractable matrices")
{
  for (auto const &name : {"transpose_a", "transpose_b"}) {
    auto m = CycleMatrix(fixtures::load(name));
    auto r = retract_once(m);
    CHECK(r.quotient == m);
    auto chain = retraction_chain(m);
    CHECK(chain.outcome == RetractionChain::Outcome::Irretractable);
    CHECK(chain.stages.size() == 1);
    CHECK_FALSE(chain.level());
    CHECK_FALSE(multipermutation_level(m));
  }
}

TEST_CASE("retraction chains shrink and classes are numbered by least member")
{
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto const &m : enumerate_classes(n).classes) {
      auto chain = retraction_chain(m);
      REQUIRE(chain.class_maps.size() + 1 == chain.stages.size());
      for (std::size_t t = 0; t < chain.class_maps.size(); ++t) {
        auto const &from = chain.stages[t];
        auto const &to = chain.stages[t + 1];
        auto const &map = chain.class_maps[t];
        CHECK(to.order() < from.order());
        // first occurrences appear in increasing order
        Label next = 0;
        for (Label c : map) {
          CHECK(c <= next);
          if (c == next)
            ++next;
        }
        CHECK(next == to.order());
        // quotient law, and rows equal exactly within a class
        for (std::size_t i = 0; i < from.order(); ++i)
          for (std::size_t j = 0; j < from.order(); ++j) {
            CHECK(to.at(map[i], map[j]) == map[from.at(i, j)]);
            CHECK((map[i] == map[j]) == (from.row(i) == from.row(j)));
          }
      }
      auto const &last = chain.stages.back();
      if (chain.outcome == RetractionChain::Outcome::Terminates) {
        CHECK(last.order() == 1);
        CHECK(chain.level() == chain.class_maps.size());
      } else {
        CHECK(last.order() > 1);
        CHECK(retract_once(last).quotient == last);
      }
    }
}

TEST_CASE("point orbits")
{
  auto t3 = point_orbits(trivial_solution(3));
  CHECK(t3 == std::vector<std::vector<Label>>{{0}, {1}, {2}});
  CHECK(is_decomposable(trivial_solution(3)));
  auto zero = CycleMatrix(fixtures::load("eight_det_zero"));
  CHECK(point_orbits(zero).size() == 1);
  CHECK_FALSE(is_decomposable(zero));
  CHECK_FALSE(is_decomposable(trivial_solution(1)));

  auto ab = tensor(CycleMatrix(fixtures::load("three_a")), CycleMatrix(fixtures::load("three_b")));
  auto orbs = point_orbits(ab);
  CHECK(orbs.front() == std::vector<Label>{0, 5, 7});
  CHECK(is_decomposable(ab));
}

TEST_CASE("point orbits match the generated group")
{
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto const &m : enumerate_classes(n).classes) {
      auto group = permutation_group(m);
      REQUIRE(group);
      std::vector<std::set<Label>> expected;
      std::vector<bool> seen(n, false);
      for (Label x = 0; x < n; ++x) {
        if (seen[x])
          continue;
        std::set<Label> orbit;
        for (auto const &g : *group)
          orbit.insert(g(x));
        for (Label y : orbit)
          seen[y] = true;
        expected.push_back(orbit);
      }
      auto orbs = point_orbits(m);
      REQUIRE(orbs.size() == expected.size());
      for (std::size_t k = 0; k < orbs.size(); ++k)
        CHECK(std::set<Label>(orbs[k].begin(), orbs[k].end()) == expected[k]);
    }
}

TEST_CASE("permutation groups")
{
  auto g = permutation_group(trivial_solution(4));
  REQUIRE(g);
  CHECK(g->size() == 1);
  CHECK(g->front().is_identity());
  auto c3 = permutation_group(permutation_solution(Permutation::from_cycles(3, {{1, 2, 3}})));
  REQUIRE(c3);
  CHECK(c3->size() == 3);
  auto big = CycleMatrix(fixtures::load("eight_det_nonzero"));
  auto full = permutation_group(big);
  REQUIRE(full);
  CHECK_FALSE(permutation_group(big, full->size() - 1));
  CHECK(permutation_group(big, full->size()));
  std::set<Permutation> closure(full->begin(), full->end());
  for (auto const &a : *full)
    for (auto const &b : *full)
      CHECK(closure.count(a * b) == 1);
}

TEST_CASE("determinants")
{
  CHECK(determinant(fixtures::load("eight_det_zero")) == 0);
  CHECK(determinant(fixtures::load("eight_det_nonzero")) == -147456);
  CHECK(determinant(Matrix::from_rows({{1}})) == 1);
  CHECK(determinant(Matrix::from_rows({{2, 1}, {2, 1}})) == 0);
  CHECK(determinant(Matrix::from_rows({{1, 2}, {2, 1}})) == -3);
  // zero leading pivot needs a row swap
  CHECK(determinant(Matrix::from_rows({{1, 2, 3}, {1, 2, 1}, {3, 1, 2}})) == -10);
  CHECK(determinant(Matrix::from_rows({{1, 3, 2}, {1, 2, 3}, {3, 1, 2}})) ==
        -determinant(Matrix::from_rows({{1, 2, 3}, {1, 3, 2}, {3, 1, 2}})));
}

TEST_CASE("determinant agrees with cofactor expansion")
{
  // Laplace expansion on small 1-based tables
  std::function<long long(const std::vector<std::vector<long long>> &)> laplace =
      [&](const std::vector<std::vector<long long>> &a) -> long long {
    std::size_t n = a.size();
    if (n == 1)
      return a[0][0];
    long long sum = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<long long>> minor;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<long long> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != c)
            row.push_back(a[r][k]);
        minor.push_back(row);
      }
      sum += (c % 2 ? -1 : 1) * a[0][c] * laplace(minor);
    }
    return sum;
  };
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto const &m : enumerate_classes(n).classes) {
      std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          a[i][j] = m.at(i, j) + 1;
      CHECK(determinant(m) == laplace(a));
    }
  auto e = fixtures::load("eight_det_nonzero");
  std::vector<std::vector<long long>> a(8, std::vector<long long>(8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      a[i][j] = e.at(i, j) + 1;
  CHECK(laplace(a) == -147456);
}

TEST_CASE("determinant certificate")
{
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto const &m : enumerate_classes(n).classes)
      if (determinant(m) != 0)
        CHECK(point_orbits(m).size() == 1);
  auto zero = CycleMatrix(fixtures::load("eight_det_zero"));
  CHECK(determinant(zero) == 0);
  CHECK_FALSE(is_decomposable(zero));
}

TEST_CASE("transpose cycle matrices")
{
  for (auto const &name : {"transpose_a", "transpose_b"}) {
    auto m = CycleMatrix(fixtures::load(name));
    CHECK(is_transpose_cycle_matrix(m));
    CHECK(transpose_conditions_hold(m));
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<int> column;
      for (std::size_t i = 0; i < 4; ++i)
        column.push_back(m.at(i, j));
      CHECK(oracle::is_bijection(column));
    }
  }
  for (std::size_t n = 2; n <= 5; ++n)
    CHECK_FALSE(is_transpose_cycle_matrix(trivial_solution(n)));
  CHECK_FALSE(is_transpose_cycle_matrix(CycleMatrix(fixtures::load("three_a"))));
  CHECK(is_transpose_cycle_matrix(trivial_solution(1)));
}

TEST_CASE("transpose criterion agrees with direct conditions")
{
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto const &m : enumerate_classes(n).classes) {
      bool t = is_transpose_cycle_matrix(m);
      CHECK(t == transpose_conditions_hold(m));
      CHECK(t == oracle::is_cycle_set(oracle::table(m.matrix().transposed())));
      if (t) {
        CHECK(retract_once(m).quotient == m);
        if (m.order() > 1)
          CHECK_FALSE(multipermutation_level(m).has_value());
      }
    }
}
