#include <charnum/symfunc.hpp>

#include <charnum/error.hpp>
#include <charnum/linalg.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace charnum {
namespace {

BigInt binomial(int n, int r) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

// Coefficient of x_1^{mu_1} x_2^{mu_2} ... in e_{lambda_1} e_{lambda_2} ...
//
// Variables are handed out one at a time: variable j must be picked by exactly
// mu_j distinct factors, and each factor i must end up with exactly lambda_i
// variables. The state is the multiset of remaining factor capacities; factors
// with equal capacity are grouped and counted with binomials.
class DominantMonomialCounter {
 public:
  DominantMonomialCounter(const Partition& lambda, const Partition& mu)
      : demand_(mu.parts().begin(), mu.parts().end()),
        start_(lambda.parts().begin(), lambda.parts().end()) {}

  BigInt count() { return visit(0, start_); }

 private:
  using Key = std::pair<std::size_t, std::vector<int>>;

  BigInt visit(std::size_t j, const std::vector<int>& caps) {
    if (j == demand_.size()) return caps.empty() ? BigInt(1) : BigInt(0);
    const int variables_left = static_cast<int>(demand_.size() - j);
    if (!caps.empty() && caps.front() > variables_left) return 0;
    if (static_cast<int>(caps.size()) < demand_[j]) return 0;

    Key key{j, caps};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<std::pair<int, int>> groups;  // (capacity, count), caps sorted descending
    for (int c : caps) {
      if (!groups.empty() && groups.back().first == c)
        ++groups.back().second;
      else
        groups.emplace_back(c, 1);
    }

    BigInt total = 0;
    std::vector<int> take(groups.size());
    choose(j, groups, take, 0, demand_[j], total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void choose(std::size_t j, const std::vector<std::pair<int, int>>& groups, std::vector<int>& take,
              std::size_t g, int still_needed, BigInt& total) {
    if (g == groups.size()) {
      if (still_needed != 0) return;
      BigInt ways = 1;
      std::vector<int> next;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto [cap, n] = groups[i];
        ways *= binomial(n, take[i]);
        next.insert(next.end(), static_cast<std::size_t>(n - take[i]), cap);
        if (cap > 1) next.insert(next.end(), static_cast<std::size_t>(take[i]), cap - 1);
      }
      std::sort(next.begin(), next.end(), std::greater<>());
      total += ways * visit(j + 1, next);
      return;
    }
    const int most = std::min(groups[g].second, still_needed);
    for (int a = 0; a <= most; ++a) {
      take[g] = a;
      choose(j, groups, take, g + 1, still_needed - a, total);
    }
  }

  std::vector<int> demand_;
  std::vector<int> start_;
  std::map<Key, BigInt> memo_;
};

TransitionMatrix build_e_to_m(int k) {
  const auto& parts = partitions_of(k);
  TransitionMatrix t{k, RationalMatrix(parts.size(), parts.size())};
  for (std::size_t row = 0; row < parts.size(); ++row) {
    const Partition conj = parts[row].conjugate();
    for (std::size_t col = 0; col < parts.size(); ++col) {
      // e_lambda only involves m_mu with mu dominated by lambda'.
      if (!parts[col].dominated_by(conj)) continue;
      t.matrix(row, col) = Rational(DominantMonomialCounter(parts[row], parts[col]).count());
    }
  }
  return t;
}

template <typename Build>
const TransitionMatrix& cached(std::mutex& mutex,
                               std::map<int, std::unique_ptr<TransitionMatrix>>& cache, int k,
                               Build build) {
  if (k < 0) throw std::invalid_argument("transition matrix of negative degree");
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end())
    it = cache.emplace(k, std::make_unique<TransitionMatrix>(build(k))).first;
  return *it->second;
}

}  // namespace

const TransitionMatrix& e_to_m_matrix(int k) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TransitionMatrix>> cache;
  return cached(mutex, cache, k, build_e_to_m);
}

const TransitionMatrix& m_to_e_matrix(int k) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TransitionMatrix>> cache;
  return cached(mutex, cache, k, [](int degree) {
    return TransitionMatrix{degree, inverse(e_to_m_matrix(degree).matrix)};
  });
}

}  // namespace charnum
