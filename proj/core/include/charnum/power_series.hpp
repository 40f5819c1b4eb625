#pragma once

#include <charnum/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace charnum {

/// One-variable power series truncated after z^order. Arithmetic between
/// series of different orders truncates to the smaller one.
class PowerSeries {
 public:
  /// The zero series of the given truncation order.
  explicit PowerSeries(std::size_t order);
  /// Coefficient j of `coefficients` is the coefficient of z^j; order = size - 1.
  explicit PowerSeries(std::vector<Rational> coefficients);
  PowerSeries(std::initializer_list<Rational> coefficients);

  /// Constant 1 truncated at the given order.
  static PowerSeries one(std::size_t order);

  std::size_t order() const noexcept { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t j) const { return coefficients_[j]; }
  Rational& operator[](std::size_t j) { return coefficients_[j]; }
  std::span<const Rational> coefficients() const noexcept { return coefficients_; }

  PowerSeries truncated(std::size_t order) const;

  /// Substitutes c*z for z.
  PowerSeries scaled_argument(const Rational& c) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& a);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// t with s*t = 1 up to s.order(). Throws NonUnit if s[0] == 0.
PowerSeries series_reciprocal(const PowerSeries& s);

PowerSeries pow(const PowerSeries& s, unsigned exponent);

/// Characteristic series of the A-hat genus, (sqrt(z)/2)/sinh(sqrt(z)/2),
/// obtained by inverting sinh(w)/w at w^2 = z/4.
PowerSeries ahat_series(std::size_t order);

/// Characteristic series of the L genus, sqrt(z)/tanh(sqrt(z)), obtained as
/// the quotient of cosh and sinh(w)/w at w^2 = z.
PowerSeries l_series(std::size_t order);

}  // namespace charnum
