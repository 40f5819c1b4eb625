#pragma once

#include <charnum/matrix.hpp>
#include <charnum/partition_vector.hpp>
#include <charnum/power_series.hpp>

namespace charnum {

/// Change of basis between elementary and monomial symmetric functions of a
/// fixed degree; rows and columns follow partitions_of(degree).
struct TransitionMatrix {
  int degree = 0;
  RationalMatrix matrix;
};

/// A[lambda][mu] with e_lambda = sum_mu A[lambda][mu] m_mu. Entry (lambda, mu)
/// is the coefficient of x^mu in e_lambda(x_1..x_k), i.e. the number of 0/1
/// matrices with row sums lambda and column sums mu. Cached per degree;
/// degree 0 is the 1x1 identity.
const TransitionMatrix& e_to_m_matrix(int k);

/// B[lambda][mu] with m_lambda = sum_mu B[lambda][mu] e_mu; the exact inverse
/// of e_to_m_matrix(k). Cached per degree.
const TransitionMatrix& m_to_e_matrix(int k);

/// Linear combination of Pontrjagin monomials p_lambda = p_{lambda_1} p_{lambda_2} ...
/// of a fixed degree k.
class GenusPolynomial {
 public:
  explicit GenusPolynomial(PartitionVector coefficients)
      : coefficients_(std::move(coefficients)) {}

  int degree() const noexcept { return coefficients_.weight(); }
  const Rational& coefficient(const Partition& p) const { return coefficients_.at(p); }
  const PartitionVector& coefficients() const noexcept { return coefficients_; }
  PartitionVector& coefficients() noexcept { return coefficients_; }

  friend bool operator==(const GenusPolynomial&, const GenusPolynomial&) = default;

 private:
  PartitionVector coefficients_;
};

/*
 * Degree-k polynomial K_k(p_1..p_k) of the multiplicative sequence whose
 * characteristic series is `series`.
 *
 * With formal roots x_1..x_k, the weight-k part of prod_i Q(x_i) has
 * coefficient q_{mu_1} q_{mu_2} ... on m_mu. Rewriting each m_mu in the
 * elementary basis and identifying e_j with p_j gives K_k.
 *
 * Throws TruncationTooShort if series.order() < k, and std::invalid_argument
 * unless series[0] == 1.
 */
GenusPolynomial msequence_polynomial(const PowerSeries& series, int k);

/// sum_lambda g[lambda] * values[lambda]. Throws DegreeMismatch.
Rational evaluate_genus(const GenusPolynomial& g, const PartitionVector& values);

}  // namespace charnum
