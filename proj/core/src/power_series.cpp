#include <charnum/power_series.hpp>

#include <charnum/error.hpp>

#include <algorithm>
#include <stdexcept>

namespace charnum {

PowerSeries::PowerSeries(std::size_t order) : coefficients_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("PowerSeries: no coefficients");
}

PowerSeries::PowerSeries(std::initializer_list<Rational> coefficients)
    : PowerSeries(std::vector<Rational>(coefficients)) {}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s[0] = 1;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  PowerSeries out(order);
  for (std::size_t j = 0; j <= std::min(order, this->order()); ++j) out[j] = coefficients_[j];
  return out;
}

PowerSeries PowerSeries::scaled_argument(const Rational& c) const {
  PowerSeries out(*this);
  Rational factor = 1;
  for (Rational& q : out.coefficients_) {
    q *= factor;
    factor *= c;
  }
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t j = 0; j <= out.order(); ++j) out[j] = a[j] + b[j];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t j = 0; j <= out.order(); ++j) out[j] = a[j] - b[j];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  PowerSeries out(a);
  for (Rational& q : out.coefficients_) q *= c;
  return out;
}

PowerSeries series_reciprocal(const PowerSeries& s) {
  if (s[0] == 0) throw NonUnit("series has zero constant term");
  PowerSeries t(s.order());
  t[0] = 1 / s[0];
  for (std::size_t n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += s[j] * t[n - j];
    t[n] = -acc * t[0];
  }
  return t;
}

PowerSeries pow(const PowerSeries& s, unsigned exponent) {
  PowerSeries result = PowerSeries::one(s.order());
  PowerSeries base = s;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

// sum_n w^{2n}/(2n+1)!  and  sum_n w^{2n}/(2n)!  as series in z = w^2.
PowerSeries sinh_over_w(std::size_t order) {
  PowerSeries s(order);
  BigInt fact = 1;  // (2n+1)!
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= BigInt(2 * n) * BigInt(2 * n + 1);
    s[n] = Rational(1) / Rational(fact);
  }
  return s;
}

PowerSeries cosh_of_w(std::size_t order) {
  PowerSeries s(order);
  BigInt fact = 1;  // (2n)!
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= BigInt(2 * n - 1) * BigInt(2 * n);
    s[n] = Rational(1) / Rational(fact);
  }
  return s;
}

}  // namespace

PowerSeries ahat_series(std::size_t order) {
  if (order < 1) throw std::invalid_argument("ahat_series: order must be >= 1");
  return series_reciprocal(sinh_over_w(order).scaled_argument(Rational(1, 4)));
}

PowerSeries l_series(std::size_t order) {
  if (order < 1) throw std::invalid_argument("l_series: order must be >= 1");
  return cosh_of_w(order) * series_reciprocal(sinh_over_w(order));
}

}  // namespace charnum
