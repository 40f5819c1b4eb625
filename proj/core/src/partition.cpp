#include <charnum/partition.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace charnum {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int weight) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(weight, 0)), 1));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int part : parts_) {
    if (!out.empty() && out.back().first == part)
      ++out.back().second;
    else
      out.emplace_back(part, 1);
  }
  return out;
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> parts;
  parts.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> parts;
  if (!parts_.empty()) {
    parts.resize(static_cast<std::size_t>(parts_.front()));
    for (int part : parts_)
      for (int i = 0; i < part; ++i) ++parts[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(parts));
}

bool Partition::dominated_by(const Partition& other) const {
  int mine = 0, theirs = 0;
  for (std::size_t i = 0; i < std::max(parts_.size(), other.parts_.size()); ++i) {
    if (i < parts_.size()) mine += parts_[i];
    if (i < other.parts_.size()) theirs += other.parts_[i];
    if (mine > theirs) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    prefix.push_back(first);
    generate(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int k) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative weight");

  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;

  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(k, k, prefix, out);
    it = cache.emplace(k, std::move(out)).first;
  }
  return it->second;
}

std::size_t partition_count(int k) { return partitions_of(k).size(); }

std::size_t partition_index(const Partition& p) {
  const auto& all = partitions_of(p.weight());
  // Canonical order is lexicographically decreasing.
  auto it = std::lower_bound(all.begin(), all.end(), p, std::greater<>());
  return static_cast<std::size_t>(it - all.begin());
}

std::vector<std::pair<Partition, Partition>> partition_splittings(const Partition& p) {
  const auto mults = p.multiplicities();
  // Odometer over how many copies of each distinct part go to the left side,
  // counting down from "all of them".
  std::vector<int> taken(mults.size());
  for (std::size_t i = 0; i < mults.size(); ++i) taken[i] = mults[i].second;

  std::vector<std::pair<Partition, Partition>> out;
  for (;;) {
    std::vector<int> left, right;
    for (std::size_t i = 0; i < mults.size(); ++i) {
      left.insert(left.end(), static_cast<std::size_t>(taken[i]), mults[i].first);
      right.insert(right.end(), static_cast<std::size_t>(mults[i].second - taken[i]),
                   mults[i].first);
    }
    out.emplace_back(Partition(std::move(left)), Partition(std::move(right)));

    std::size_t pos = mults.size();
    while (pos > 0) {
      --pos;
      if (taken[pos] > 0) {
        --taken[pos];
        break;
      }
      taken[pos] = mults[pos].second;
      if (pos == 0) return out;
    }
    if (mults.empty()) return out;
  }
}

}  // namespace charnum
