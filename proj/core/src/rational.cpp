#include <charnum/rational.hpp>

#include <stdexcept>
#include <string>

namespace charnum {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text), 10));
    BigInt num(std::string(text.substr(0, slash)), 10);
    BigInt den(std::string(text.substr(slash + 1)), 10);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
}

bool is_canonical(const Rational& q) {
  if (q.get_den() <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

Rational power_of_two(unsigned n) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, n);
  return Rational(v);
}

}  // namespace charnum
