#include <charnum/cobordism.hpp>
#include <charnum/error.hpp>
#include <charnum/symfunc.hpp>

#include <doctest.h>

#include "oracles.hpp"

#include <stdexcept>

using charnum::GenusPolynomial;
using charnum::make_rational;
using charnum::Partition;
using charnum::PartitionVector;
using charnum::PowerSeries;
using charnum::Rational;
using charnum::RationalMatrix;

namespace {

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

TEST_CASE("e_to_m_matrix small degrees") {
  CHECK(charnum::e_to_m_matrix(1).matrix == RationalMatrix{{1}});
  // rows e_2, e_1^2; columns m_(2), m_(1,1)
  CHECK(charnum::e_to_m_matrix(2).matrix == RationalMatrix{{0, 1}, {1, 2}});

  const auto& t3 = charnum::e_to_m_matrix(3);
  const std::size_t row = charnum::partition_index(Partition{2, 1});
  CHECK(t3.matrix(row, charnum::partition_index(Partition{3})) == 0);
  CHECK(t3.matrix(row, charnum::partition_index(Partition{2, 1})) == 1);
  CHECK(t3.matrix(row, charnum::partition_index(Partition{1, 1, 1})) == 3);
}

TEST_CASE("e_to_m_matrix agrees with explicit expansion in k variables") {
  for (int k = 1; k <= 6; ++k) {
    const auto& parts = charnum::partitions_of(k);
    const auto& t = charnum::e_to_m_matrix(k);
    for (std::size_t r = 0; r < parts.size(); ++r)
      for (std::size_t c = 0; c < parts.size(); ++c) {
        CAPTURE(k);
        CHECK(t.matrix(r, c) == oracle::brute_force_e_to_m(parts_of(parts[r]), parts_of(parts[c]), k));
      }
  }
}

TEST_CASE("m_to_e_matrix inverts e_to_m_matrix") {
  CHECK(charnum::m_to_e_matrix(1).matrix == RationalMatrix{{1}});
  // m_(2) = e_1^2 - 2 e_2 ; m_(1,1) = e_2
  CHECK(charnum::m_to_e_matrix(2).matrix == RationalMatrix{{-2, 1}, {1, 0}});
  for (int k = 1; k <= 10; ++k) {
    const auto n = charnum::partitions_of(k).size();
    CHECK(charnum::e_to_m_matrix(k).matrix * charnum::m_to_e_matrix(k).matrix ==
          RationalMatrix::identity(n));
  }
}

TEST_CASE("msequence_polynomial for A-hat and L") {
  const GenusPolynomial a1 = charnum::msequence_polynomial(charnum::ahat_series(1), 1);
  CHECK(a1.coefficient(Partition{1}) == make_rational(-1, 24));

  const GenusPolynomial a2 = charnum::msequence_polynomial(charnum::ahat_series(2), 2);
  CHECK(a2.coefficient(Partition{2}) == make_rational(-4, 5760));
  CHECK(a2.coefficient(Partition{1, 1}) == make_rational(7, 5760));

  const GenusPolynomial l2 = charnum::msequence_polynomial(charnum::l_series(2), 2);
  CHECK(l2.coefficient(Partition{2}) == make_rational(7, 45));
  CHECK(l2.coefficient(Partition{1, 1}) == make_rational(-1, 45));

  const GenusPolynomial l1 = charnum::msequence_polynomial(charnum::l_series(1), 1);
  CHECK(l1.coefficient(Partition{1}) == make_rational(1, 3));
}

TEST_CASE("msequence_polynomial matches brute-force symmetric reduction") {
  for (int k = 1; k <= 5; ++k) {
    for (const PowerSeries& series : {charnum::ahat_series(static_cast<std::size_t>(k)),
                                      charnum::l_series(static_cast<std::size_t>(k))}) {
      const std::vector<Rational> q(series.coefficients().begin(), series.coefficients().end());
      const auto expected = oracle::brute_force_msequence(q, k);
      const GenusPolynomial got = charnum::msequence_polynomial(series, k);
      for (const Partition& p : charnum::partitions_of(k)) {
        const auto it = expected.find(parts_of(p));
        const Rational want = it == expected.end() ? Rational(0) : it->second;
        CAPTURE(k);
        CHECK(got.coefficient(p) == want);
      }
    }
  }
}

TEST_CASE("Q(z) = 1 + z gives K_k = p_k") {
  for (int k = 1; k <= 6; ++k) {
    PowerSeries q(static_cast<std::size_t>(k));
    q[0] = 1;
    q[1] = 1;
    const GenusPolynomial g = charnum::msequence_polynomial(q, k);
    PartitionVector expected(k);
    expected.set(Partition{k}, 1);
    CHECK(g.coefficients() == expected);
  }
}

TEST_CASE("msequence_polynomial errors") {
  CHECK_THROWS_AS(charnum::msequence_polynomial(charnum::ahat_series(2), 3),
                  charnum::TruncationTooShort);
  CHECK_THROWS_AS(charnum::msequence_polynomial(PowerSeries{2, 1, 0}, 2), std::invalid_argument);
}

TEST_CASE("evaluate_genus") {
  const GenusPolynomial a1 = charnum::ahat_polynomial(1);
  const GenusPolynomial a2 = charnum::ahat_polynomial(2);

  PartitionVector hp2(2);
  hp2.set(Partition{2}, 7);
  hp2.set(Partition{1, 1}, 4);
  CHECK(charnum::evaluate_genus(a2, hp2) == 0);

  PartitionVector k3(1);
  k3.set(Partition{1}, -48);
  CHECK(charnum::evaluate_genus(a1, k3) == 2);

  CHECK(charnum::evaluate_genus(a2, PartitionVector(2)) == 0);
  CHECK_THROWS_AS(charnum::evaluate_genus(a2, k3), charnum::DegreeMismatch);
}
