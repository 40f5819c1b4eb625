#include <charnum/partition_vector.hpp>

#include <charnum/error.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace charnum {

PartitionVector::PartitionVector(int weight)
    : weight_(weight), values_(partition_count(weight)) {}

PartitionVector::PartitionVector(int weight, std::vector<Rational> values)
    : weight_(weight), values_(std::move(values)) {
  if (values_.size() != partition_count(weight))
    throw std::invalid_argument("PartitionVector: expected " +
                                std::to_string(partition_count(weight)) + " values, got " +
                                std::to_string(values_.size()));
}

std::size_t PartitionVector::index_checked(const Partition& p) const {
  if (p.weight() != weight_)
    throw DegreeMismatch("partition " + p.to_string() + " has weight " +
                         std::to_string(p.weight()) + ", expected " + std::to_string(weight_));
  return partition_index(p);
}

const Rational& PartitionVector::at(const Partition& p) const {
  return values_[index_checked(p)];
}

void PartitionVector::set(const Partition& p, Rational value) {
  values_[index_checked(p)] = std::move(value);
}

Rational PartitionVector::dot(const PartitionVector& other) const {
  if (other.weight_ != weight_)
    throw DegreeMismatch("weight " + std::to_string(weight_) + " paired with weight " +
                         std::to_string(other.weight_));
  Rational sum = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) sum += values_[i] * other.values_[i];
  return sum;
}

bool PartitionVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace charnum
