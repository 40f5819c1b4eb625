#pragma once

#include <charnum/partition.hpp>
#include <charnum/rational.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace charnum {

/// Rational values indexed by the partitions of a fixed weight, stored densely
/// in canonical partition order. Serves as the common carrier of Pontrjagin
/// numbers, s-numbers and genus coefficients.
class PartitionVector {
 public:
  PartitionVector() : PartitionVector(0) {}
  /// All-zero vector of the given weight.
  explicit PartitionVector(int weight);
  /// Throws std::invalid_argument unless values.size() == partition_count(weight).
  PartitionVector(int weight, std::vector<Rational> values);

  int weight() const noexcept { return weight_; }
  std::size_t size() const noexcept { return values_.size(); }

  Rational& operator[](std::size_t i) { return values_[i]; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

  /// Throws DegreeMismatch if p has a different weight.
  const Rational& at(const Partition& p) const;
  void set(const Partition& p, Rational value);

  std::span<const Rational> values() const noexcept { return values_; }
  const std::vector<Partition>& keys() const { return partitions_of(weight_); }

  /// Sum of products of matching entries. Throws DegreeMismatch.
  Rational dot(const PartitionVector& other) const;

  bool is_zero() const;

  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;

 private:
  std::size_t index_checked(const Partition& p) const;

  int weight_;
  std::vector<Rational> values_;
};

}  // namespace charnum
