#pragma once

#include <charnum/cobordism.hpp>

#include <utility>
#include <vector>

namespace charnum {

/// Both of Thom's basis-sequence tests for N^1..N^k.
struct BasisSequenceCertificate {
  int weight = 0;
  std::vector<Rational> determinants;   ///< det basis_matrix(j), j = 1..weight
  std::vector<Rational> top_s_numbers;  ///< s_(j)[N^j], j = 1..weight

  bool determinants_nonzero() const;
  bool s_numbers_nonzero() const;
  /// Both criteria hold.
  bool ok() const { return determinants_nonzero() && s_numbers_nonzero(); }
  /// The two criteria reach the same verdict for every j.
  bool consistent() const;
};

BasisSequenceCertificate basis_sequence_certificate(int k, int max_weight = kDefaultMaxWeight);

/// True iff both criteria hold (and therefore agree) for every j <= k.
bool verify_basis_sequence(int k, int max_weight = kDefaultMaxWeight);

struct VerificationReport {
  int weight = 0;
  bool basis_ok = false;  ///< basis_matrix(weight) is nonsingular
  Rational basis_determinant;
  /// Kernel of the Pontrjagin-number matrix of every basis class except
  /// (N^1)^k; vectors normalized to first nonzero entry 1.
  std::vector<std::vector<Rational>> kernel;
  std::size_t kernel_dimension = 0;
  GenusPolynomial candidate{PartitionVector(1)};  ///< A-hat_k unless overridden
  bool kernel_matches_ahat = false;
  Rational ahat_value_on_kummer_power;  ///< candidate on (N^1)^k
  /// (j, A-hat_j(N^j)) for j = 1..weight; the j = weight entry uses the candidate.
  std::vector<std::pair<int, Rational>> generator_ahat_values;

  /// kernel_dimension == 1, kernel_matches_ahat, value on (N^1)^k == 2^k,
  /// candidate(N^1) == 2 and candidate(N^j) == 0 for j >= 2.
  bool holds() const;
};

/// Checks that the linear forms vanishing on every basis class other than
/// (N^1)^k are exactly the multiples of A-hat_k. Throws OutOfRange.
VerificationReport verify_characterization(int k, int max_weight = kDefaultMaxWeight);

/// As above with `candidate` in place of A-hat_k. Throws DegreeMismatch if
/// candidate.degree() != k.
VerificationReport verify_characterization(int k, const GenusPolynomial& candidate,
                                           int max_weight = kDefaultMaxWeight);

/// Rescales the covector so that its value on `reference` is 1, falling back
/// to first-nonzero-entry normalization when that value is 0.
std::vector<Rational> normalize_against(std::vector<Rational> covector,
                                        const PartitionVector& reference);

}  // namespace charnum
