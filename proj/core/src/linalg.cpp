#include <charnum/linalg.hpp>

#include <charnum/error.hpp>

#include <stdexcept>
#include <utility>

namespace charnum {
namespace {

using IntRow = std::vector<BigInt>;

// Row-echelon form of an integral matrix produced by Bareiss elimination.
struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;  // parity of row swaps
};

// Writes row r of m as a primitive integer vector (coprime entries) and
// returns the rational factor s with out = s * row.
Rational integral_row(const RationalMatrix& m, std::size_t r, IntRow& out) {
  BigInt den = 1;
  for (const Rational& q : m.row(r)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  out.resize(m.cols());
  BigInt content = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& q = m(r, c);
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    out[c] = q.get_num() * factor;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[c].get_mpz_t());
  }
  if (content > 1)
    for (BigInt& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  if (content == 0) content = 1;
  return make_rational(den, content);
}

Echelon bareiss(std::vector<IntRow> a, std::size_t cols) {
  Echelon e;
  const std::size_t nrows = a.size();
  BigInt prev = 1;
  BigInt t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.sign = -e.sign;
    }
    const BigInt& pivot = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const BigInt lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(t.get_mpz_t(), pivot.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

Echelon echelon_of(const RationalMatrix& m, Rational* scale_product = nullptr) {
  std::vector<IntRow> a(m.rows());
  Rational product = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) product *= integral_row(m, r, a[r]);
  if (scale_product) *scale_product = product;
  return bareiss(std::move(a), m.cols());
}

// Solves the echelon system for a vector x, given values already assigned to
// the free columns. Pivot variables are filled by back substitution.
void back_substitute(const Echelon& e, std::vector<Rational>& x) {
  for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
    const std::size_t pc = e.pivot_cols[i];
    const IntRow& row = e.rows[i];
    Rational acc = 0;
    for (std::size_t j = pc + 1; j < x.size(); ++j)
      if (row[j] != 0 && x[j] != 0) acc += Rational(row[j]) * x[j];
    x[pc] = -acc / Rational(row[pc]);
  }
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) throw NonSquare("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational scale;
  const Echelon e = echelon_of(m, &scale);
  if (e.pivot_cols.size() < n) return 0;
  // The last Bareiss pivot equals the determinant of the scaled matrix.
  Rational det(e.rows[n - 1][n - 1] * e.sign);
  return det / scale;
}

std::size_t rank(const RationalMatrix& m) { return echelon_of(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const Echelon e = echelon_of(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols());
    x[free] = 1;
    back_substitute(e, x);
    basis.push_back(normalize_leading(std::move(x)));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // Augment the row-scaled matrix D*m with D, then solve (D*m) X = D.
  std::vector<IntRow> a(n);
  for (std::size_t r = 0; r < n; ++r) {
    IntRow row;
    const Rational scale = integral_row(m, r, row);
    row.resize(2 * n);
    // (D*m) X = D with D = diag(scale); only integers may enter the elimination.
    for (BigInt& v : row) v *= scale.get_den();
    row[n + r] = scale.get_num();
    a[r] = std::move(row);
  }
  Echelon e = bareiss(std::move(a), 2 * n);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1)
    throw std::domain_error("inverse of a singular matrix");

  RationalMatrix out(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
      const IntRow& row = e.rows[i];
      Rational acc(row[n + col]);
      for (std::size_t j = i + 1; j < n; ++j)
        if (row[j] != 0 && x[j] != 0) acc -= Rational(row[j]) * x[j];
      x[i] = acc / Rational(row[i]);
    }
    for (std::size_t i = 0; i < n; ++i) out(i, col) = std::move(x[i]);
  }
  return out;
}

std::vector<Rational> normalize_leading(std::vector<Rational> v) {
  for (const Rational& q : v) {
    if (q == 0) continue;
    const Rational lead = q;
    for (Rational& x : v) x /= lead;
    break;
  }
  return v;
}

}  // namespace charnum
