#pragma once

#include <charnum/matrix.hpp>
#include <charnum/partition_vector.hpp>
#include <charnum/symfunc.hpp>

namespace charnum {

/// Largest weight (real dimension 4k) accepted by default.
inline constexpr int kDefaultMaxWeight = 16;

/// p_1 of the Kummer (K3) surface: c_1 = 0 and c_2 = Euler characteristic 24,
/// so p_1 = c_1^2 - 2 c_2 = -48. Signature check: L_1 = p_1/3 = -16.
inline constexpr int kKummerP1 = -48;

/// Rational oriented cobordism class of dimension 4k, recorded by all of its
/// Pontrjagin numbers p_lambda[M], lambda a partition of k.
class CobordismClass {
 public:
  explicit CobordismClass(PartitionVector p_numbers) : p_numbers_(std::move(p_numbers)) {}

  int weight() const noexcept { return p_numbers_.weight(); }
  const PartitionVector& p_numbers() const noexcept { return p_numbers_; }
  const Rational& number(const Partition& p) const { return p_numbers_.at(p); }

  friend bool operator==(const CobordismClass&, const CobordismClass&) = default;

 private:
  PartitionVector p_numbers_;
};

/// Characteristic numbers in the monomial-symmetric basis (Milnor s-numbers).
class SNumberVector {
 public:
  explicit SNumberVector(PartitionVector s_numbers) : s_numbers_(std::move(s_numbers)) {}

  int weight() const noexcept { return s_numbers_.weight(); }
  const PartitionVector& s_numbers() const noexcept { return s_numbers_; }
  const Rational& number(const Partition& p) const { return s_numbers_.at(p); }

  friend bool operator==(const SNumberVector&, const SNumberVector&) = default;

 private:
  PartitionVector s_numbers_;
};

/// Weight 0 unit of the cobordism ring; its only number p_() is 1.
CobordismClass point_class();

/// The Kummer surface N^1: {(1): -48}.
CobordismClass kummer_class();

/// HP^k. Total Pontrjagin class (1+u)^{2k+2} (1+4u)^{-1} with <u^k,[HP^k]> = 1,
/// so p_lambda = prod_i [u^{lambda_i}]. Throws OutOfRange unless 1 <= k <= max_weight.
CobordismClass quaternionic_class(int k, int max_weight = kDefaultMaxWeight);

/// N^1 = K3, N^k = HP^k for k >= 2. Throws OutOfRange.
CobordismClass generator(int k, int max_weight = kDefaultMaxWeight);

SNumberVector p_to_s(const CobordismClass& c);
CobordismClass s_to_p(const SNumberVector& v);

/// Cartesian product, computed on s-numbers with the splitting rule
/// s_lambda[A x B] = sum_{mu + nu = lambda} s_mu[A] s_nu[B].
CobordismClass product(const CobordismClass& a, const CobordismClass& b);

/// Same contract as product(), computed independently from
/// p_j(A x B) = sum_{i+i'=j} p_i(A) (x) p_{i'}(B). Brute force; for cross-checks.
CobordismClass product_p_basis_oracle(const CobordismClass& a, const CobordismClass& b);

/// prod_i N^{lambda_i}; the empty partition gives point_class(). Throws OutOfRange.
CobordismClass basis_class(const Partition& lambda, int max_weight = kDefaultMaxWeight);

/// s_{(k)}[c]; nonzero exactly on classes that are indecomposable in the ring.
/// The point class has no top s-number and returns 0.
Rational s_top_number(const CobordismClass& c);

/// Rows: basis_class(lambda); columns: p_mu; both in canonical order. Throws OutOfRange.
RationalMatrix basis_matrix(int k, int max_weight = kDefaultMaxWeight);

GenusPolynomial ahat_polynomial(int k, int max_weight = kDefaultMaxWeight);
GenusPolynomial l_polynomial(int k, int max_weight = kDefaultMaxWeight);

/// Genus value on a class. Throws DegreeMismatch.
Rational evaluate_genus(const GenusPolynomial& g, const CobordismClass& c);

}  // namespace charnum
