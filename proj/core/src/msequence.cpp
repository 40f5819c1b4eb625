#include <charnum/symfunc.hpp>

#include <charnum/error.hpp>

#include <stdexcept>
#include <string>

namespace charnum {

GenusPolynomial msequence_polynomial(const PowerSeries& series, int k) {
  if (k < 1) throw std::invalid_argument("msequence_polynomial: degree must be >= 1");
  if (series.order() < static_cast<std::size_t>(k))
    throw TruncationTooShort("series truncated at order " + std::to_string(series.order()) +
                             " cannot produce degree " + std::to_string(k));
  if (series[0] != 1)
    throw std::invalid_argument("characteristic series must have constant term 1");

  const auto& parts = partitions_of(k);
  const RationalMatrix& to_e = m_to_e_matrix(k).matrix;

  PartitionVector coefficients(k);
  for (std::size_t mu = 0; mu < parts.size(); ++mu) {
    Rational m_coeff = 1;
    for (int part : parts[mu].parts()) m_coeff *= series[static_cast<std::size_t>(part)];
    if (m_coeff == 0) continue;
    for (std::size_t nu = 0; nu < parts.size(); ++nu)
      if (to_e(mu, nu) != 0) coefficients[nu] += m_coeff * to_e(mu, nu);
  }
  return GenusPolynomial(std::move(coefficients));
}

Rational evaluate_genus(const GenusPolynomial& g, const PartitionVector& values) {
  return g.coefficients().dot(values);
}

}  // namespace charnum
