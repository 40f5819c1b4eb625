#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace charnum {

using BigInt = mpz_class;

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built from a raw numerator/denominator
/// pair must go through make_rational().
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "num/den", always with an explicit denominator ("7/1", "-1/24", "0/1").
std::string to_string(const Rational& q);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_canonical(const Rational& q);

/// 2^n as a rational.
Rational power_of_two(unsigned n);

}  // namespace charnum
