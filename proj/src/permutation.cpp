#include "cyclemat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclemat {

Permutation::Permutation(std::vector<Label> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Label y = images_[i];
    if (y >= images_.size() || seen[y])
      throw std::invalid_argument("not a permutation: image list is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n)
{
  std::vector<Label> id(n);
  std::iota(id.begin(), id.end(), Label{0});
  return Permutation(std::move(id));
}

Permutation Permutation::from_images(std::span<const int> images)
{
  std::vector<Label> zero_based;
  zero_based.reserve(images.size());
  for (int y : images) {
    if (y < 1 || static_cast<std::size_t>(y) > images.size())
      throw std::invalid_argument("permutation image " + std::to_string(y) +
                                  " out of range 1.." + std::to_string(images.size()));
    zero_based.push_back(static_cast<Label>(y - 1));
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_images(std::initializer_list<int> images)
{
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     std::initializer_list<std::initializer_list<int>> cycles)
{
  std::vector<Label> images(n);
  std::iota(images.begin(), images.end(), Label{0});
  std::vector<bool> used(n, false);
  for (auto const &cycle : cycles) {
    std::vector<int> pts(cycle);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      int p = pts[k];
      if (p < 1 || static_cast<std::size_t>(p) > n || used[p - 1])
        throw std::invalid_argument("bad cycle point " + std::to_string(p));
      used[p - 1] = true;
      images[p - 1] = static_cast<Label>(pts[(k + 1) % pts.size()] - 1);
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation &rhs) const
{
  if (rhs.degree() != degree())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<Label> out(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    out[x] = images_[rhs.images_[x]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const
{
  std::vector<Label> out(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    out[images_[x]] = static_cast<Label>(x);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

CycleType Permutation::cycle_type() const
{
  CycleType lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<int> Permutation::one_based() const
{
  std::vector<int> out;
  out.reserve(degree());
  for (Label y : images_)
    out.push_back(static_cast<int>(y) + 1);
  return out;
}

std::string Permutation::to_string() const
{
  std::string s;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (x)
      s += ',';
    s += std::to_string(images_[x] + 1);
  }
  return s;
}

Permutation least_conjugate(const CycleType &type)
{
  std::size_t n = std::accumulate(type.begin(), type.end(), std::size_t{0});
  std::vector<Label> images(n);
  std::size_t start = 0;
  for (std::size_t len : type) {
    for (std::size_t k = 0; k < len; ++k)
      images[start + k] = static_cast<Label>(start + (k + 1) % len);
    start += len;
  }
  return Permutation(std::move(images));
}

Permutation least_rooted_conjugate(const CycleType &type, std::size_t root_length)
{
  CycleType rest = type;
  auto it = std::find(rest.begin(), rest.end(), root_length);
  if (it == rest.end())
    throw std::invalid_argument("cycle type has no part of length " + std::to_string(root_length));
  rest.erase(it);
  std::vector<Label> images(root_length);
  for (std::size_t k = 0; k < root_length; ++k)
    images[k] = static_cast<Label>((k + 1) % root_length);
  Permutation tail = least_conjugate(rest);
  for (Label v : tail.images())
    images.push_back(static_cast<Label>(v + root_length));
  return Permutation(std::move(images));
}

std::size_t cycle_length(const Permutation &p, Label x)
{
  std::size_t len = 1;
  for (Label y = p(x); y != x; y = p(y))
    ++len;
  return len;
}

std::vector<Permutation> all_permutations(std::size_t n)
{
  std::vector<Label> images(n);
  std::iota(images.begin(), images.end(), Label{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace {

void partitions_rec(std::size_t remaining, std::size_t min_part, CycleType &cur,
                    std::vector<CycleType> &out)
{
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = min_part; part <= remaining; ++part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<CycleType> partitions_of(std::size_t n)
{
  std::vector<CycleType> out;
  CycleType cur;
  partitions_rec(n, 1, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace cyclemat
