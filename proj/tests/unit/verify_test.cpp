#include <charnum/error.hpp>
#include <charnum/verify.hpp>

#include <doctest.h>

#include <thread>
#include <vector>

using charnum::make_rational;
using charnum::Partition;
using charnum::Rational;

TEST_CASE("verify_basis_sequence") {
  CHECK(charnum::verify_basis_sequence(1));
  CHECK(charnum::verify_basis_sequence(4));
  const auto cert = charnum::basis_sequence_certificate(8);
  CHECK(cert.ok());
  CHECK(cert.consistent());
  CHECK(cert.determinants.front() == -48);
  CHECK(cert.top_s_numbers.at(1) == -10);
  CHECK_THROWS_AS(charnum::verify_basis_sequence(0), charnum::OutOfRange);
}

TEST_CASE("certificate consistency flags disagreement") {
  charnum::BasisSequenceCertificate cert;
  cert.weight = 2;
  cert.determinants = {-48, 0};
  cert.top_s_numbers = {-48, -10};
  CHECK_FALSE(cert.ok());
  CHECK_FALSE(cert.consistent());
}

TEST_CASE("verify_characterization k = 1 takes the zero-constraint path") {
  const auto report = charnum::verify_characterization(1);
  CHECK(report.kernel_dimension == 1);
  CHECK(report.kernel_matches_ahat);
  CHECK(report.ahat_value_on_kummer_power == 2);
  CHECK(report.basis_ok);
  CHECK(report.holds());
}

TEST_CASE("verify_characterization k = 2 by hand") {
  const auto report = charnum::verify_characterization(2);
  REQUIRE(report.kernel_dimension == 1);
  CHECK(report.kernel[0] == std::vector<Rational>{1, make_rational(-7, 4)});
  CHECK(report.kernel_matches_ahat);
  CHECK(report.ahat_value_on_kummer_power == 4);
  CHECK(report.basis_determinant == 23040);
  REQUIRE(report.generator_ahat_values.size() == 2);
  CHECK(report.generator_ahat_values[0] == std::pair<int, Rational>{1, 2});
  CHECK(report.generator_ahat_values[1] == std::pair<int, Rational>{2, 0});
  CHECK(report.holds());
}

TEST_CASE("verify_characterization holds for k = 3..8") {
  for (int k = 3; k <= 8; ++k) {
    CAPTURE(k);
    const auto report = charnum::verify_characterization(k);
    CHECK(report.kernel_dimension == 1);
    CHECK(report.kernel_matches_ahat);
    CHECK(report.ahat_value_on_kummer_power == charnum::power_of_two(static_cast<unsigned>(k)));
    CHECK(report.holds());
  }
}

TEST_CASE("a scalar multiple of A-hat still matches; a perturbed one does not") {
  const int k = 4;
  charnum::GenusPolynomial scaled = charnum::ahat_polynomial(k);
  for (std::size_t i = 0; i < scaled.coefficients().size(); ++i) scaled.coefficients()[i] *= -3;
  const auto scaled_report = charnum::verify_characterization(k, scaled);
  CHECK(scaled_report.kernel_matches_ahat);
  // The projective statement holds, but the 2^k normalization does not.
  CHECK_FALSE(scaled_report.holds());

  for (std::size_t i = 0; i < charnum::partitions_of(k).size(); ++i) {
    charnum::GenusPolynomial mutated = charnum::ahat_polynomial(k);
    mutated.coefficients()[i] += make_rational(1, 1000);
    const auto report = charnum::verify_characterization(k, mutated);
    CHECK_FALSE(report.kernel_matches_ahat);
    CHECK_FALSE(report.holds());
  }
  CHECK_THROWS_AS(charnum::verify_characterization(k, charnum::ahat_polynomial(3)),
                  charnum::DegreeMismatch);
}

TEST_CASE("normalize_against falls back to the leading entry") {
  charnum::PartitionVector reference(2, {1, 0});
  CHECK(charnum::normalize_against({2, 6}, reference) == std::vector<Rational>{1, 3});
  charnum::PartitionVector orthogonal(2, {0, 0});
  CHECK(charnum::normalize_against({0, 5, }, orthogonal) == std::vector<Rational>{0, 1});
}

TEST_CASE("concurrent callers share caches and get identical reports") {
  constexpr int kThreads = 4;
  std::vector<charnum::VerificationReport> reports(kThreads);
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t)
    threads.emplace_back([&reports, t] { reports[static_cast<std::size_t>(t)] = charnum::verify_characterization(9 + t % 2); });
  for (auto& th : threads) th.join();
  for (int t = 2; t < kThreads; ++t) {
    CHECK(reports[static_cast<std::size_t>(t)].kernel == reports[static_cast<std::size_t>(t - 2)].kernel);
    CHECK(reports[static_cast<std::size_t>(t)].holds());
  }
}
