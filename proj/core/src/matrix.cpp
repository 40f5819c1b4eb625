#include <charnum/matrix.hpp>

#include <stdexcept>

namespace charnum {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  for (const auto& r : rows) {
    std::vector<Rational> values(r);
    append_row(values);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && entries_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

}  // namespace charnum
