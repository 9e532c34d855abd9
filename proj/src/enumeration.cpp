#include "cyclemat/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cyclemat/action.hpp"
#include "cyclemat/retraction.hpp"
#include "cyclemat/structure.hpp"

namespace cyclemat {

namespace {

constexpr std::size_t max_enumeration_order = 8;

void check_order(std::size_t n)
{
  if (n == 0 || n > max_enumeration_order)
    throw std::invalid_argument("enumeration order must be in 1.." +
                                std::to_string(max_enumeration_order));
}

// Candidate rows shared by all workers.
struct RowTable
{
  explicit RowTable(std::size_t n)
  : n(n)
  {
    std::set<Permutation> keys;
    std::vector<Permutation> key_of;
    for (auto const &p : all_permutations(n)) {
      rows.emplace_back(p.images().begin(), p.images().end());
      for (std::size_t r = 0; r < n; ++r) {
        key_of.push_back(least_rooted_conjugate(p.cycle_type(), cycle_length(p, static_cast<Label>(r))));
        keys.insert(key_of.back());
      }
      if (key_of[key_of.size() - n] == p)
        leaders.push_back(rows.size() - 1);
    }
    std::vector<Permutation> sorted(keys.begin(), keys.end());
    for (auto const &k : key_of)
      first_row_rank.push_back(static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
  }

  int rank(std::size_t idx, std::size_t point) const { return first_row_rank[idx * n + point]; }

  std::size_t n;
  std::vector<std::vector<Label>> rows; // lexicographic
  // Rank of the least first row a relabeling sending `point` to 1 can give.
  std::vector<int> first_row_rank;
  // Rows that are their own least first row at point 0.
  std::vector<std::size_t> leaders;
};

class RowSearch
{
public:
  RowSearch(const RowTable &table, bool orderly)
  : t_(table), n_(table.n), orderly_(orderly), m_(n_), chosen_(n_),
    forced_(n_ + 1, std::vector<int>(n_ * n_, -1)), diag_used_(n_, false)
  {}

  SearchStats stats;

  // Re-places a recorded prefix without counting it.
  void replay(const std::vector<std::size_t> &prefix)
  {
    for (std::size_t r = 0; r < prefix.size(); ++r) {
      [[maybe_unused]] bool ok = place(r, prefix[r]);
      assert(ok);
    }
  }

  template <class Visit>
  bool explore(std::size_t r, Visit &&visit)
  {
    if (r == n_)
      return visit(m_, chosen_);
    auto try_row = [&](std::size_t idx) {
      if (!place(r, idx)) {
        ++stats.prunes;
        unplace(r);
        return true;
      }
      ++stats.nodes;
      bool go_on = explore(r + 1, visit);
      unplace(r);
      return go_on;
    };
    if (orderly_ && r == 0) {
      for (std::size_t idx : t_.leaders)
        if (!try_row(idx))
          return false;
    } else {
      for (std::size_t idx = 0; idx < t_.rows.size(); ++idx)
        if (!try_row(idx))
          return false;
    }
    return true;
  }

  // Prefixes of length `depth`, counted into stats.
  void collect(std::size_t r, std::size_t depth, std::vector<std::vector<std::size_t>> &out)
  {
    explore_to(r, depth, out);
  }

private:
  void explore_to(std::size_t r, std::size_t depth, std::vector<std::vector<std::size_t>> &out)
  {
    if (r == depth) {
      out.emplace_back(chosen_.begin(), chosen_.begin() + static_cast<std::ptrdiff_t>(depth));
      return;
    }
    auto try_row = [&](std::size_t idx) {
      if (place(r, idx)) {
        ++stats.nodes;
        explore_to(r + 1, depth, out);
      } else {
        ++stats.prunes;
      }
      unplace(r);
    };
    if (orderly_ && r == 0)
      for (std::size_t idx : t_.leaders)
        try_row(idx);
    else
      for (std::size_t idx = 0; idx < t_.rows.size(); ++idx)
        try_row(idx);
  }

  bool force(std::vector<int> &f, std::size_t r, std::size_t row, std::size_t col, Label val)
  {
    int &slot = f[row * n_ + col];
    if (slot >= 0)
      return slot == val;
    for (std::size_t c = 0; c < n_; ++c)
      if (f[row * n_ + c] == val)
        return false;
    if (col == row && diag_used_[val])
      return false;
    if (col <= r && m_.at(col, row) == val)
      return false;
    slot = val;
    return true;
  }

  bool place(std::size_t r, std::size_t idx)
  {
    const auto &p = t_.rows[idx];
    const auto &before = forced_[r];
    if (orderly_ && r > 0 && t_.rank(idx, r) < t_.rank(chosen_[0], 0))
      return false;
    if (diag_used_[p[r]])
      return false;
    for (std::size_t c = 0; c < n_; ++c) {
      int f = before[r * n_ + c];
      if (f >= 0 && f != p[c])
        return false;
    }
    for (std::size_t j = 0; j < r; ++j)
      if (p[j] == m_.at(j, r))
        return false;
    for (std::size_t s = r + 1; s < n_; ++s) {
      if (before[s * n_ + s] == p[r])
        return false;
      if (before[s * n_ + r] == p[s])
        return false;
    }

    for (std::size_t c = 0; c < n_; ++c)
      m_.at(r, c) = p[c];
    chosen_[r] = idx;
    diag_used_[p[r]] = true;
    placed_ = r;

    auto &f = forced_[r + 1];
    f = before;
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = i + 1; j <= r; ++j) {
        Label a = m_.at(i, j), c = m_.at(j, i);
        std::size_t top = std::max(i, j);
        for (std::size_t k = 0; k < n_; ++k) {
          Label b = m_.at(i, k), d = m_.at(j, k);
          if (a == c) {
            if (top == r && b != d)
              return false;
            continue;
          }
          bool a_known = a <= r, c_known = c <= r;
          if (a_known && c_known) {
            if (std::max<std::size_t>({top, a, c}) == r && m_.at(a, b) != m_.at(c, d))
              return false;
          } else if (a_known) {
            if (std::max<std::size_t>(top, a) == r && !force(f, r, c, d, m_.at(a, b)))
              return false;
          } else if (c_known) {
            if (std::max<std::size_t>(top, c) == r && !force(f, r, a, b, m_.at(c, d)))
              return false;
          }
        }
      }
    return true;
  }

  void unplace(std::size_t r)
  {
    if (placed_ == r) {
      diag_used_[m_.at(r, r)] = false;
      placed_ = r - 1; // wraps for r == 0; only compared for equality
    }
  }

  const RowTable &t_;
  std::size_t n_;
  bool orderly_;
  Matrix m_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<int>> forced_;
  std::vector<bool> diag_used_;
  std::size_t placed_ = static_cast<std::size_t>(-1);
};

std::uint64_t factorial(std::size_t n)
{
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k)
    f *= k;
  return f;
}

struct TaskResult
{
  std::set<Matrix> classes;
  std::uint64_t raw = 0;
  SearchStats stats;
};

} // namespace

SearchStats for_each_cycle_matrix(std::size_t n,
                                  const std::function<bool(const CycleMatrix &)> &visit)
{
  check_order(n);
  RowTable table(n);
  RowSearch search(table, false);
  search.explore(0, [&](const Matrix &m, const std::vector<std::size_t> &) {
    return visit(CycleMatrix::assume_valid(m));
  });
  return search.stats;
}

std::vector<CycleMatrix> enumerate_raw(std::size_t n)
{
  std::vector<CycleMatrix> out;
  for_each_cycle_matrix(n, [&](const CycleMatrix &m) {
    out.push_back(m);
    return true;
  });
  return out;
}

ClassEnumeration enumerate_classes(std::size_t n, std::size_t jobs, DedupMode mode)
{
  check_order(n);
  if (jobs == 0)
    throw std::invalid_argument("jobs must be at least 1");
  if (mode == DedupMode::Automatic)
    mode = n <= 5 ? DedupMode::CanonicalKeys : DedupMode::Orderly;
  bool orderly = mode == DedupMode::Orderly;

  RowTable table(n);
  std::vector<std::vector<std::size_t>> prefixes;
  RowSearch splitter(table, orderly);
  splitter.collect(0, std::min<std::size_t>(orderly ? 2 : 1, n - 1), prefixes);

  std::vector<TaskResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < prefixes.size(); task = next++) {
      RowSearch search(table, orderly);
      search.replay(prefixes[task]);
      TaskResult &res = results[task];
      search.explore(prefixes[task].size(), [&](const Matrix &m, const std::vector<std::size_t> &) {
        CycleMatrix cm = CycleMatrix::assume_valid(m);
        auto canon = canonical_form(cm);
        if (orderly) {
          if (canon.matrix.matrix() == m)
            res.classes.insert(m);
        } else {
          ++res.raw;
          res.classes.insert(canon.matrix.matrix());
        }
        return true;
      });
      res.stats = search.stats;
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(jobs, prefixes.size()); ++w)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  ClassEnumeration out;
  out.n = n;
  out.stats = splitter.stats;
  std::set<Matrix> merged;
  for (auto &res : results) {
    out.raw_count += res.raw;
    out.stats += res.stats;
    merged.merge(res.classes);
  }
  for (auto const &m : merged)
    out.classes.push_back(CycleMatrix::assume_valid(m));
  if (orderly) {
    std::uint64_t total = factorial(n);
    for (auto const &rep : out.classes)
      out.raw_count += total / automorphism_count(rep);
  }
  return out;
}

bool EnumFilter::matches(const CycleMatrix &m) const
{
  if (square_free && m.is_square_free() != *square_free)
    return false;
  if (indecomposable && is_decomposable(m) == *indecomposable)
    return false;
  if (transpose && is_transpose_cycle_matrix(m) != *transpose)
    return false;
  if (permutation_only && m.is_permutation_solution() != *permutation_only)
    return false;
  if (max_level) {
    auto level = multipermutation_level(m);
    if (!level || *level > *max_level)
      return false;
  }
  return true;
}

nlohmann::json EnumFilter::to_json() const
{
  nlohmann::json j = nlohmann::json::object();
  if (square_free)
    j["square_free"] = *square_free;
  if (indecomposable)
    j["indecomposable"] = *indecomposable;
  if (transpose)
    j["transpose"] = *transpose;
  if (max_level)
    j["max_level"] = *max_level;
  if (permutation_only)
    j["permutation_only"] = *permutation_only;
  return j;
}

CensusReport census(std::size_t n, const EnumFilter &filter, std::size_t jobs, DedupMode mode)
{
  auto classes = enumerate_classes(n, jobs, mode);
  CensusReport report;
  report.n = n;
  report.raw_count = classes.raw_count;
  report.iso_count = classes.classes.size();
  report.filter = filter;
  report.stats = classes.stats;

  std::vector<std::pair<std::string, EnumFilter>> singles;
  auto single = [&](const char *name, auto member) {
    if (filter.*member) {
      EnumFilter f;
      f.*member = filter.*member;
      singles.emplace_back(name, f);
    }
  };
  single("square_free", &EnumFilter::square_free);
  single("indecomposable", &EnumFilter::indecomposable);
  single("transpose", &EnumFilter::transpose);
  single("max_level", &EnumFilter::max_level);
  single("permutation_only", &EnumFilter::permutation_only);

  for (auto const &[name, f] : singles) {
    auto count = std::count_if(classes.classes.begin(), classes.classes.end(),
                               [&](const CycleMatrix &m) { return f.matches(m); });
    report.filter_counts.emplace_back(name, static_cast<std::uint64_t>(count));
  }
  for (auto &m : classes.classes)
    if (filter.matches(m))
      report.matching.push_back(std::move(m));
  report.matching_count = report.matching.size();
  return report;
}

nlohmann::json CensusReport::to_json() const
{
  nlohmann::json counts = nlohmann::json::object();
  for (auto const &[name, count] : filter_counts)
    counts[name] = count;
  return {
      {"n", n},
      {"raw_count", raw_count},
      {"iso_count", iso_count},
      {"filter", filter.to_json()},
      {"filter_counts", counts},
      {"matching_count", matching_count},
      {"stats", {{"nodes", stats.nodes}, {"prunes", stats.prunes}}},
  };
}

std::string CensusReport::to_table() const
{
  std::ostringstream os;
  auto line = [&](const std::string &key, auto value) {
    os << key << std::string(key.size() < 20 ? 20 - key.size() : 1, ' ') << value << '\n';
  };
  line("n", n);
  line("raw_count", raw_count);
  line("iso_count", iso_count);
  for (auto const &[name, count] : filter_counts)
    line(name, count);
  line("matching_count", matching_count);
  line("nodes", stats.nodes);
  line("prunes", stats.prunes);
  return os.str();
}

} // namespace cyclemat
