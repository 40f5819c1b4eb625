#include <charnum/verify.hpp>

#include <charnum/error.hpp>
#include <charnum/linalg.hpp>

#include <algorithm>
#include <string>

namespace charnum {

bool BasisSequenceCertificate::determinants_nonzero() const {
  return std::none_of(determinants.begin(), determinants.end(),
                      [](const Rational& d) { return d == 0; });
}

bool BasisSequenceCertificate::s_numbers_nonzero() const {
  return std::none_of(top_s_numbers.begin(), top_s_numbers.end(),
                      [](const Rational& s) { return s == 0; });
}

bool BasisSequenceCertificate::consistent() const {
  if (determinants.size() != top_s_numbers.size()) return false;
  // det basis_matrix(j) != 0 for all j <= i  <=>  s_(j)[N^j] != 0 for all j <= i.
  bool det_prefix = true, s_prefix = true;
  for (std::size_t i = 0; i < determinants.size(); ++i) {
    det_prefix = det_prefix && determinants[i] != 0;
    s_prefix = s_prefix && top_s_numbers[i] != 0;
    if (det_prefix != s_prefix) return false;
  }
  return true;
}

BasisSequenceCertificate basis_sequence_certificate(int k, int max_weight) {
  if (k < 1 || k > max_weight)
    throw OutOfRange("basis_sequence_certificate: weight " + std::to_string(k) +
                     " outside [1, " + std::to_string(max_weight) + "]");
  BasisSequenceCertificate cert;
  cert.weight = k;
  for (int j = 1; j <= k; ++j) {
    cert.determinants.push_back(determinant(basis_matrix(j, max_weight)));
    cert.top_s_numbers.push_back(s_top_number(generator(j, max_weight)));
  }
  return cert;
}

bool verify_basis_sequence(int k, int max_weight) {
  const auto cert = basis_sequence_certificate(k, max_weight);
  return cert.ok() && cert.consistent();
}

std::vector<Rational> normalize_against(std::vector<Rational> covector,
                                        const PartitionVector& reference) {
  Rational value = 0;
  for (std::size_t i = 0; i < covector.size(); ++i) value += covector[i] * reference[i];
  if (value == 0) return normalize_leading(std::move(covector));
  for (Rational& q : covector) q /= value;
  return covector;
}

bool VerificationReport::holds() const {
  if (kernel_dimension != 1 || !kernel_matches_ahat) return false;
  if (ahat_value_on_kummer_power != power_of_two(static_cast<unsigned>(weight))) return false;
  for (const auto& [j, value] : generator_ahat_values)
    if (value != (j == 1 ? Rational(2) : Rational(0))) return false;
  return true;
}

VerificationReport verify_characterization(int k, int max_weight) {
  if (k < 1 || k > max_weight)
    throw OutOfRange("verify_characterization: weight " + std::to_string(k) +
                     " outside [1, " + std::to_string(max_weight) + "]");
  return verify_characterization(k, ahat_polynomial(k, max_weight), max_weight);
}

VerificationReport verify_characterization(int k, const GenusPolynomial& candidate,
                                           int max_weight) {
  if (k < 1 || k > max_weight)
    throw OutOfRange("verify_characterization: weight " + std::to_string(k) +
                     " outside [1, " + std::to_string(max_weight) + "]");
  if (candidate.degree() != k)
    throw DegreeMismatch("candidate of degree " + std::to_string(candidate.degree()) +
                         " checked at weight " + std::to_string(k));

  VerificationReport report;
  report.weight = k;
  report.candidate = candidate;

  const auto& parts = partitions_of(k);
  const Partition excluded = Partition::ones(k);

  // Every basis class except (N^1)^k constrains the kernel; for k = 1 there
  // are no constraints and the kernel is the whole (1-dimensional) space.
  RationalMatrix constraints(0, parts.size());
  RationalMatrix full(0, parts.size());
  PartitionVector kummer_power(k);
  for (const Partition& lambda : parts) {
    const CobordismClass c = basis_class(lambda, max_weight);
    full.append_row(c.p_numbers().values());
    if (lambda == excluded)
      kummer_power = c.p_numbers();
    else
      constraints.append_row(c.p_numbers().values());
  }

  report.basis_determinant = determinant(full);
  report.basis_ok = report.basis_determinant != 0;
  report.kernel = kernel_basis(constraints);
  report.kernel_dimension = report.kernel.size();

  const std::vector<Rational> ahat(candidate.coefficients().values().begin(),
                                   candidate.coefficients().values().end());
  if (report.kernel_dimension == 1)
    report.kernel_matches_ahat = normalize_against(report.kernel.front(), kummer_power) ==
                                 normalize_against(ahat, kummer_power);

  report.ahat_value_on_kummer_power = evaluate_genus(candidate, kummer_power);
  for (int j = 1; j <= k; ++j) {
    const GenusPolynomial g = j == k ? candidate : ahat_polynomial(j, max_weight);
    report.generator_ahat_values.emplace_back(j, evaluate_genus(g, generator(j, max_weight)));
  }
  return report;
}

}  // namespace charnum
