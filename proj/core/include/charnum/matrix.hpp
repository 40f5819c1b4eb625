#pragma once

#include <charnum/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace charnum {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Rational> entries() const noexcept { return entries_; }

  /// Appends a row; its length must equal cols() (or set cols() on an empty matrix).
  void append_row(std::span<const Rational> values);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> x);

RationalMatrix transpose(const RationalMatrix& m);

}  // namespace charnum
