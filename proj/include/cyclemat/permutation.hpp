#ifndef CYCLEMAT_PERMUTATION_HPP
#define CYCLEMAT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cyclemat {

/// Internal point label. Labels are 0-based inside the library; every
/// textual or JSON surface (and the Python bindings) uses 1-based labels.
using Label = std::uint16_t;

/// Ascending list of cycle lengths, fixed points included.
///
/// The natural `std::vector` ordering on these lists is the total order used
/// for canonical forms: a smaller cycle type has a lexicographically smaller
/// least conjugate.
using CycleType = std::vector<std::size_t>;

/// A bijection of {0, ..., n-1}.
class Permutation
{
public:
  Permutation() = default;

  /// Takes 0-based images; throws std::invalid_argument unless bijective.
  explicit Permutation(std::vector<Label> images);

  static Permutation identity(std::size_t n);

  /// 1-based image list, e.g. {2, 1, 3} for the transposition (1,2) on 3 points.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);

  /// Cycle notation with 1-based points; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t n,
                                 std::initializer_list<std::initializer_list<int>> cycles);

  std::size_t degree() const { return images_.size(); }

  Label operator()(Label x) const { return images_[x]; }

  std::span<const Label> images() const { return images_; }

  /// Composition as maps: `(a * b)(x) == a(b(x))`.
  Permutation operator*(const Permutation &rhs) const;

  Permutation inverse() const;

  bool is_identity() const;

  CycleType cycle_type() const;

  /// 1-based image list.
  std::vector<int> one_based() const;

  /// Comma separated 1-based image list, "2,1,3".
  std::string to_string() const;

  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<Label> images_;
};

/// Least element, in lexicographic image order, of the conjugacy class with
/// the given cycle type: cycles sorted by ascending length, each written as
/// consecutive points a -> a+1 -> ... -> a.
Permutation least_conjugate(const CycleType &type);

/// Least conjugate of the given cycle type in which label 0 lies on a cycle
/// of length `root_length`: that cycle on 0 .. root_length - 1, the rest as
/// in least_conjugate. Throws std::invalid_argument if no part has that length.
Permutation least_rooted_conjugate(const CycleType &type, std::size_t root_length);

/// Length of the cycle of `p` through `x`.
std::size_t cycle_length(const Permutation &p, Label x);

/// All permutations of degree n in lexicographic image order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Integer partitions of n in ascending-list form, ordered ascending.
std::vector<CycleType> partitions_of(std::size_t n);

} // namespace cyclemat

#endif // CYCLEMAT_PERMUTATION_HPP
