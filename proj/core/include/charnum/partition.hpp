#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace charnum {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Sorts `parts` into decreasing order first. Zero entries are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  /// (1,...,1) of the given weight.
  static Partition ones(int weight);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept { return weight_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// (value, multiplicity) for each distinct part, largest value first.
  std::vector<std::pair<int, int>> multiplicities() const;

  /// Multiset union.
  Partition merged(const Partition& other) const;

  /// Transposed Young diagram.
  Partition conjugate() const;

  /// Dominance order: every prefix sum of *this is <= the matching prefix sum
  /// of `other`. Both must have the same weight.
  bool dominated_by(const Partition& other) const;

  /// Bracketed part list, e.g. "[2,1,1]"; the empty partition is "[]".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Every partition of k exactly once, reverse-lexicographic: (k) first,
/// (1,...,1) last. Memoized per weight; the returned reference stays valid
/// for the lifetime of the program.
const std::vector<Partition>& partitions_of(int k);

/// Position of p inside partitions_of(p.weight()).
std::size_t partition_index(const Partition& p);

/// Number of partitions of k.
std::size_t partition_count(int k);

/// Every ordered pair (mu, nu) whose multiset union is p, each exactly once.
/// The first pair is (p, ()) and the last is ((), p).
std::vector<std::pair<Partition, Partition>> partition_splittings(const Partition& p);

}  // namespace charnum
