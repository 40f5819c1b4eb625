#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oracle {

std::vector<std::vector<int>> brute_force_partitions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  // Compositions of n correspond to subsets of the n-1 gaps.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int gap = 0; gap < n - 1; ++gap) {
      if (mask & (std::uint64_t{1} << gap)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    if (std::is_sorted(parts.begin(), parts.end(), std::greater<>())) out.push_back(parts);
  }
  return out;
}

std::uint64_t euler_partition_count(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t acc = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > m) break;
      const int sign = (j % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return static_cast<std::uint64_t>(p[static_cast<std::size_t>(n)]);
}

MultiPoly MultiPoly::constant(int variables, const Rational& c) {
  MultiPoly p(variables);
  p.add(std::vector<int>(static_cast<std::size_t>(variables), 0), c);
  return p;
}

MultiPoly MultiPoly::elementary(int variables, int degree) {
  MultiPoly p(variables);
  if (degree > variables) return p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << variables); ++mask) {
    if (std::popcount(mask) != degree) continue;
    std::vector<int> e(static_cast<std::size_t>(variables), 0);
    for (int i = 0; i < variables; ++i)
      if (mask & (std::uint64_t{1} << i)) e[static_cast<std::size_t>(i)] = 1;
    p.add(e, 1);
  }
  return p;
}

Rational MultiPoly::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add(const std::vector<int>& exponents, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::times(const MultiPoly& other, int max_degree) const {
  MultiPoly out(variables_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      std::vector<int> e(ea.size());
      int degree = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        degree += e[i];
      }
      if (degree <= max_degree) out.add(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::minus(const MultiPoly& other) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add(e, -c);
  return out;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly out(variables_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == degree) out.add(e, c);
  return out;
}

Rational brute_force_e_to_m(const std::vector<int>& lambda, const std::vector<int>& mu, int k) {
  MultiPoly p = MultiPoly::constant(k, 1);
  for (int part : lambda) p = p.times(MultiPoly::elementary(k, part), k);
  std::vector<int> target(static_cast<std::size_t>(k), 0);
  std::copy(mu.begin(), mu.end(), target.begin());
  return p.coefficient(target);
}

std::map<std::vector<int>, Rational> to_elementary_basis(MultiPoly p) {
  const int n = p.variables();
  const int max_degree = 64;
  std::map<std::vector<int>, Rational> out;
  while (!p.is_zero()) {
    const auto& [lead, c] = *p.terms().rbegin();  // lex-largest exponent vector
    const std::vector<int> a = lead;
    const Rational coeff = c;
    if (!std::is_sorted(a.begin(), a.end(), std::greater<>()))
      throw std::logic_error("to_elementary_basis: polynomial is not symmetric");
    // Leading term of prod_j e_j^{a_j - a_{j+1}} is x^a.
    std::vector<int> partition;
    MultiPoly term = MultiPoly::constant(n, coeff);
    for (int j = 1; j <= n; ++j) {
      const int next = j < n ? a[static_cast<std::size_t>(j)] : 0;
      const int power = a[static_cast<std::size_t>(j - 1)] - next;
      for (int r = 0; r < power; ++r) {
        partition.push_back(j);
        term = term.times(MultiPoly::elementary(n, j), max_degree);
      }
    }
    std::sort(partition.begin(), partition.end(), std::greater<>());
    out[partition] += coeff;
    p = p.minus(term);
  }
  return out;
}

std::map<std::vector<int>, Rational> brute_force_msequence(const std::vector<Rational>& q, int k) {
  MultiPoly product = MultiPoly::constant(k, 1);
  for (int i = 0; i < k; ++i) {
    MultiPoly factor(k);
    for (int j = 0; j <= k && j < static_cast<int>(q.size()); ++j) {
      std::vector<int> e(static_cast<std::size_t>(k), 0);
      e[static_cast<std::size_t>(i)] = j;
      factor.add(e, q[static_cast<std::size_t>(j)]);
    }
    product = product.times(factor, k);
  }
  return to_elementary_basis(product.homogeneous_part(k));
}

std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) {
      charnum::BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
      acc += Rational(c) * b[static_cast<std::size_t>(j)];
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

namespace {
charnum::BigInt factorial(int n) {
  charnum::BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}
charnum::BigInt pow2(int n) {
  charnum::BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return v;
}
}  // namespace

Rational ahat_coefficient(int n) {
  const Rational b = bernoulli(2 * n)[static_cast<std::size_t>(2 * n)];
  return (Rational(2) - Rational(pow2(2 * n))) * b / Rational(factorial(2 * n) * pow2(2 * n));
}

Rational l_coefficient(int n) {
  const Rational b = bernoulli(2 * n)[static_cast<std::size_t>(2 * n)];
  return Rational(pow2(2 * n)) * b / Rational(factorial(2 * n));
}

Rational laplace_determinant(const charnum::RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col) == 0) continue;
    charnum::RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    const Rational term = m(0, col) * laplace_determinant(minor);
    det += (col % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

charnum::RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                      int bound, double zero_probability) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  std::bernoulli_distribution zero(zero_probability);
  charnum::RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = zero(rng) ? Rational(0) : charnum::make_rational(num(rng), den(rng));
  return m;
}

Rational random_big_rational(std::mt19937_64& rng, int digits) {
  std::uniform_int_distribution<int> digit(0, 9);
  auto draw = [&](bool nonzero) {
    std::string s;
    for (int i = 0; i < digits; ++i) s += static_cast<char>('0' + digit(rng));
    if (nonzero) s.front() = '1';
    return charnum::BigInt(s, 10);
  };
  charnum::BigInt n = draw(false);
  if (std::bernoulli_distribution(0.5)(rng)) n = -n;
  return charnum::make_rational(n, draw(true));
}

}  // namespace oracle
