#include "cyclemat/action.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cyclemat {

Matrix act(const Permutation &sigma, const Matrix &m)
{
  std::size_t n = m.order();
  if (sigma.degree() != n)
    throw std::invalid_argument("act: permutation degree " + std::to_string(sigma.degree()) +
                                " does not match matrix order " + std::to_string(n));
  Permutation inv = sigma.inverse();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.at(i, j) = sigma(m.at(inv(static_cast<Label>(i)), inv(static_cast<Label>(j))));
  return out;
}

CycleMatrix act(const Permutation &sigma, const CycleMatrix &m)
{
  return CycleMatrix::assume_valid(act(sigma, m.matrix()));
}

std::optional<Label> automorphism_witness(const Permutation &alpha, const CycleMatrix &m)
{
  std::size_t n = m.order();
  if (alpha.degree() != n)
    throw std::invalid_argument("automorphism check: degree mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    Label ai = alpha(static_cast<Label>(i));
    for (std::size_t y = 0; y < n; ++y)
      if (alpha(m.at(i, y)) != m.at(ai, alpha(static_cast<Label>(y))))
        return static_cast<Label>(i);
  }
  return std::nullopt;
}

std::vector<CycleType> row_cycle_types(const CycleMatrix &m)
{
  std::vector<CycleType> types;
  types.reserve(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    types.push_back(m.row(i).cycle_type());
  std::sort(types.begin(), types.end());
  return types;
}

namespace {

// Transposition (y z) is an automorphism.
bool swap_is_automorphism(const Matrix &m, Label y, Label z)
{
  auto s = [y, z](Label x) -> Label { return x == y ? z : (x == z ? y : x); };
  std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s(m.at(i, j)) != m.at(s(static_cast<Label>(i)), s(static_cast<Label>(j))))
        return false;
  return true;
}

Permutation least_first_row(const CycleMatrix &m, Label x)
{
  Permutation row = m.row(x);
  return least_rooted_conjugate(row.cycle_type(), cycle_length(row, x));
}

class CanonicalSearch
{
public:
  explicit CanonicalSearch(const CycleMatrix &cm)
  : m_(cm.matrix()), n_(cm.order()), twin_(n_), sigma_(n_, -1), tau_(n_)
  {
    for (std::size_t z = 0; z < n_; ++z) {
      twin_[z] = static_cast<Label>(z);
      for (std::size_t y = 0; y < z; ++y)
        if (swap_is_automorphism(m_, static_cast<Label>(y), static_cast<Label>(z))) {
          twin_[z] = static_cast<Label>(y);
          break;
        }
    }
  }

  CanonicalForm run(const CycleMatrix &cm)
  {
    // Point x can only start a result whose first row is at least
    // least_first_row(x); only the points with the smallest bound are tried.
    std::vector<Permutation> first(n_);
    for (std::size_t x = 0; x < n_; ++x)
      first[x] = least_first_row(cm, static_cast<Label>(x));
    Permutation least = *std::min_element(first.begin(), first.end());

    std::vector<Label> explored;
    for (std::size_t x = 0; x < n_; ++x) {
      if (first[x] != least || covered(static_cast<Label>(x), explored, 0))
        continue;
      explored.push_back(static_cast<Label>(x));
      x0_ = static_cast<Label>(x);
      assign(x0_);
      extend(0, !best_);
      undo(0);
    }

    std::vector<Label> labeling(n_);
    for (std::size_t x = 0; x < n_; ++x)
      labeling[x] = static_cast<Label>(best_sigma_[x]);
    return {CycleMatrix::assume_valid(std::move(*best_)), Permutation(std::move(labeling))};
  }

private:
  static constexpr std::size_t no_jump = static_cast<std::size_t>(-1);

  void assign(Label old)
  {
    sigma_[old] = static_cast<int>(t_);
    tau_[t_++] = old;
  }

  void undo(std::size_t mark)
  {
    while (t_ > mark)
      sigma_[tau_[--t_]] = -1;
  }

  // Some known automorphism fixing tau[0 .. depth) pointwise maps y into
  // `explored`, so the subtree of y repeats one already searched.
  bool covered(Label y, const std::vector<Label> &explored, std::size_t depth) const
  {
    if (explored.empty())
      return false;
    if (twin_[y] != y &&
        std::find(explored.begin(), explored.end(), twin_[y]) != explored.end())
      return true;
    std::vector<Label> root(n_);
    std::iota(root.begin(), root.end(), Label{0});
    auto find = [&](Label v) {
      while (root[v] != v)
        v = root[v] = root[root[v]];
      return v;
    };
    bool any = false;
    for (auto const &a : automorphisms_) {
      bool fixes = true;
      for (std::size_t p = 0; p < depth && fixes; ++p)
        fixes = a[tau_[p]] == tau_[p];
      if (!fixes)
        continue;
      any = true;
      for (std::size_t v = 0; v < n_; ++v)
        root[find(static_cast<Label>(v))] = find(a[v]);
    }
    if (!any)
      return false;
    Label r = find(y);
    return std::any_of(explored.begin(), explored.end(), [&](Label e) { return find(e) == r; });
  }

  // Value the result would show at (0, j) if tau(j) = y.
  int prospective(std::size_t j, Label y) const
  {
    Label v = m_.at(x0_, y);
    if (sigma_[v] >= 0)
      return sigma_[v];
    return v == y ? static_cast<int>(j) : static_cast<int>(j) + 1;
  }

  // Returns false when the entry exceeds the incumbent, updating `less` otherwise.
  bool compare_entry(std::size_t pos, int entry, bool &less) const
  {
    if (less)
      return true;
    int incumbent = best_->entries()[pos];
    if (entry > incumbent)
      return false;
    if (entry < incumbent)
      less = true;
    return true;
  }

  // Every path shares the same first row, so the known prefix of the second
  // row already decides against the incumbent.
  bool second_row_ok(bool &less) const
  {
    if (less || !best_ || t_ < 2)
      return true;
    for (std::size_t k = 0; k < t_; ++k) {
      int incumbent = best_->entries()[n_ + k];
      int v = sigma_[m_.at(tau_[1], tau_[k])];
      if (v < 0)
        return static_cast<int>(t_) <= incumbent;
      if (v != incumbent) {
        less = v < incumbent;
        return less;
      }
    }
    return true;
  }

  // Returns the depth to unwind to after an automorphism was found, or no_jump.
  std::size_t extend(std::size_t j, bool less)
  {
    if (j == n_)
      return leaf(less);
    if (!second_row_ok(less))
      return no_jump;
    std::size_t mark = t_;
    if (j < t_) {
      Label v = m_.at(x0_, tau_[j]);
      if (sigma_[v] < 0)
        assign(v);
      std::size_t jump = no_jump;
      if (compare_entry(j, sigma_[v], less))
        jump = extend(j + 1, less);
      undo(mark);
      return jump;
    }

    int least = static_cast<int>(n_) + 1;
    for (std::size_t y = 0; y < n_; ++y)
      if (sigma_[y] < 0)
        least = std::min(least, prospective(j, static_cast<Label>(y)));

    std::vector<Label> explored;
    for (std::size_t y = 0; y < n_; ++y) {
      if (sigma_[y] >= 0 || prospective(j, static_cast<Label>(y)) != least)
        continue;
      if (covered(static_cast<Label>(y), explored, j))
        continue;
      explored.push_back(static_cast<Label>(y));
      bool child_less = less;
      if (!compare_entry(j, least, child_less))
        return no_jump;
      std::size_t updates = updates_;
      assign(static_cast<Label>(y));
      Label v = m_.at(x0_, static_cast<Label>(y));
      if (sigma_[v] < 0)
        assign(v);
      std::size_t jump = extend(j + 1, child_less);
      undo(mark);
      if (jump < j)
        return jump;
      // a new incumbent found below shares this prefix
      if (updates_ != updates)
        less = false;
    }
    return no_jump;
  }

  std::size_t leaf(bool less)
  {
    Matrix candidate(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        int e = sigma_[m_.at(tau_[i], tau_[j])];
        if (!compare_entry(i * n_ + j, e, less))
          return no_jump;
        candidate.at(i, j) = static_cast<Label>(e);
      }
    if (less) {
      best_ = std::move(candidate);
      best_sigma_ = sigma_;
      best_tau_ = tau_;
      ++updates_;
      return no_jump;
    }
    // Same matrix as the incumbent: best^-1 o sigma is an automorphism
    // carrying this path onto the incumbent's, so everything below the
    // point where the two paths part has been seen.
    std::vector<Label> a(n_);
    for (std::size_t x = 0; x < n_; ++x)
      a[x] = best_tau_[sigma_[x]];
    automorphisms_.push_back(std::move(a));
    std::size_t p = 0;
    while (p < n_ && tau_[p] == best_tau_[p])
      ++p;
    return p;
  }

  const Matrix &m_;
  std::size_t n_;
  std::vector<Label> twin_;
  std::vector<int> sigma_;
  std::vector<Label> tau_;
  std::size_t t_ = 0;
  Label x0_ = 0;
  std::optional<Matrix> best_;
  std::vector<int> best_sigma_;
  std::vector<Label> best_tau_;
  std::size_t updates_ = 0;
  std::vector<std::vector<Label>> automorphisms_;
};

// Backtracking search for maps f with f(a[x][y]) = b[f(x)][f(y)], which is the
// row condition f * psi_x = psi'_{f(x)} * f written entrywise. Every
// assignment is closed under that condition before branching again.
class MorphismSearch
{
public:
  MorphismSearch(const Matrix &a, const Matrix &b)
  : a_(a), b_(b), n_(a.order()), fwd_(n_, -1), bwd_(n_, -1), key_a_(n_), key_b_(n_)
  {
    std::map<std::pair<CycleType, std::size_t>, int> ids;
    auto keys = [&](const Matrix &m, std::vector<int> &out) {
      std::vector<std::size_t> diag_cycle(n_, 0);
      std::vector<bool> seen(n_, false);
      for (std::size_t x = 0; x < n_; ++x) {
        if (seen[x])
          continue;
        std::vector<std::size_t> cyc;
        for (std::size_t y = x; !seen[y]; y = m.at(y, y)) {
          seen[y] = true;
          cyc.push_back(y);
        }
        for (auto y : cyc)
          diag_cycle[y] = cyc.size();
      }
      for (std::size_t x = 0; x < n_; ++x) {
        auto r = m.row(x);
        Permutation p(std::vector<Label>(r.begin(), r.end()));
        auto key = std::make_pair(p.cycle_type(), diag_cycle[x]);
        auto [it, inserted] = ids.try_emplace(key, static_cast<int>(ids.size()));
        out[x] = it->second;
      }
    };
    keys(a_, key_a_);
    keys(b_, key_b_);
  }

  bool point_keys_match() const
  {
    auto ka = key_a_, kb = key_b_;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
  }

  // visit returns false to stop the search
  void run(const std::function<bool(const std::vector<int> &)> &visit)
  {
    visit_ = &visit;
    stopped_ = false;
    search();
  }

private:
  bool set(Label x, Label y)
  {
    if (fwd_[x] >= 0)
      return fwd_[x] == y;
    if (bwd_[y] >= 0 || key_a_[x] != key_b_[y])
      return false;
    fwd_[x] = y;
    bwd_[y] = x;
    trail_.push_back(x);
    return true;
  }

  bool propagate(std::size_t from)
  {
    for (std::size_t q = from; q < trail_.size(); ++q) {
      Label p = trail_[q];
      for (std::size_t idx = 0; idx < trail_.size(); ++idx) {
        Label c = trail_[idx];
        for (auto [u, v] : {std::pair{p, c}, std::pair{c, p}}) {
          Label src = a_.at(u, v);
          Label tgt = b_.at(static_cast<Label>(fwd_[u]), static_cast<Label>(fwd_[v]));
          if (!set(src, tgt))
            return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark)
  {
    while (trail_.size() > mark) {
      Label x = trail_.back();
      trail_.pop_back();
      bwd_[fwd_[x]] = -1;
      fwd_[x] = -1;
    }
  }

  void search()
  {
    if (trail_.size() == n_) {
      if (!(*visit_)(fwd_))
        stopped_ = true;
      return;
    }
    std::size_t x = 0;
    while (fwd_[x] >= 0)
      ++x;
    for (std::size_t y = 0; y < n_ && !stopped_; ++y) {
      if (bwd_[y] >= 0)
        continue;
      std::size_t mark = trail_.size();
      if (set(static_cast<Label>(x), static_cast<Label>(y)) && propagate(mark))
        search();
      undo(mark);
    }
  }

  const Matrix &a_;
  const Matrix &b_;
  std::size_t n_;
  std::vector<int> fwd_, bwd_;
  std::vector<int> key_a_, key_b_;
  std::vector<Label> trail_;
  const std::function<bool(const std::vector<int> &)> *visit_ = nullptr;
  bool stopped_ = false;
};

Permutation to_permutation(const std::vector<int> &images)
{
  return Permutation(std::vector<Label>(images.begin(), images.end()));
}

} // namespace

CanonicalForm canonical_form(const CycleMatrix &m)
{
  return CanonicalSearch(m).run(m);
}

std::optional<Permutation> are_isomorphic(const CycleMatrix &a, const CycleMatrix &b)
{
  if (a.order() != b.order())
    return std::nullopt;
  if (a.diagonal().cycle_type() != b.diagonal().cycle_type() ||
      row_cycle_types(a) != row_cycle_types(b))
    return std::nullopt;
  MorphismSearch search(a.matrix(), b.matrix());
  if (!search.point_keys_match())
    return std::nullopt;
  std::optional<Permutation> found;
  search.run([&](const std::vector<int> &f) {
    found = to_permutation(f);
    return false;
  });
  return found;
}

std::vector<Permutation> automorphisms(const CycleMatrix &m)
{
  std::vector<Permutation> out;
  MorphismSearch search(m.matrix(), m.matrix());
  search.run([&](const std::vector<int> &f) {
    out.push_back(to_permutation(f));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t automorphism_count(const CycleMatrix &m)
{
  std::size_t count = 0;
  MorphismSearch search(m.matrix(), m.matrix());
  search.run([&](const std::vector<int> &) {
    ++count;
    return true;
  });
  return count;
}

} // namespace cyclemat
