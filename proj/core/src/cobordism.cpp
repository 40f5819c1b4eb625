#include <charnum/cobordism.hpp>

#include <charnum/error.hpp>
#include <charnum/power_series.hpp>

#include <string>

namespace charnum {
namespace {

void check_weight(const char* what, int k, int max_weight) {
  if (k < 1 || k > max_weight)
    throw OutOfRange(std::string(what) + ": weight " + std::to_string(k) +
                     " outside [1, " + std::to_string(max_weight) + "]");
}

PartitionVector apply(const RationalMatrix& m, const PartitionVector& v) {
  PartitionVector out(v.weight());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) acc += m(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

}  // namespace

CobordismClass point_class() {
  PartitionVector numbers(0);
  numbers[0] = 1;
  return CobordismClass(std::move(numbers));
}

CobordismClass kummer_class() {
  PartitionVector numbers(1);
  numbers[0] = kKummerP1;
  return CobordismClass(std::move(numbers));
}

CobordismClass quaternionic_class(int k, int max_weight) {
  check_weight("quaternionic_class", k, max_weight);
  const auto order = static_cast<std::size_t>(k);
  const PowerSeries one_plus_u{1, 1};
  const PowerSeries one_plus_4u{1, 4};
  const PowerSeries total = pow(one_plus_u.truncated(order), static_cast<unsigned>(2 * k + 2)) *
                            series_reciprocal(one_plus_4u.truncated(order));

  PartitionVector numbers(k);
  const auto& parts = partitions_of(k);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Rational value = 1;
    for (int part : parts[i].parts()) value *= total[static_cast<std::size_t>(part)];
    numbers[i] = std::move(value);
  }
  return CobordismClass(std::move(numbers));
}

CobordismClass generator(int k, int max_weight) {
  check_weight("generator", k, max_weight);
  return k == 1 ? kummer_class() : quaternionic_class(k, max_weight);
}

// m_lambda = sum_mu B[lambda][mu] e_mu, evaluated on the Pontrjagin roots.
SNumberVector p_to_s(const CobordismClass& c) {
  return SNumberVector(apply(m_to_e_matrix(c.weight()).matrix, c.p_numbers()));
}

CobordismClass s_to_p(const SNumberVector& v) {
  return CobordismClass(apply(e_to_m_matrix(v.weight()).matrix, v.s_numbers()));
}

namespace {

// Splitting rule on s-numbers; no change of basis.
SNumberVector s_product(const SNumberVector& sa, const SNumberVector& sb) {
  const int weight = sa.weight() + sb.weight();

  PartitionVector s(weight);
  const auto& parts = partitions_of(weight);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Rational acc = 0;
    for (const auto& [left, right] : partition_splittings(parts[i])) {
      if (left.weight() != sa.weight()) continue;
      acc += sa.number(left) * sb.number(right);
    }
    s[i] = std::move(acc);
  }
  return SNumberVector(std::move(s));
}

}  // namespace

CobordismClass product(const CobordismClass& a, const CobordismClass& b) {
  return s_to_p(s_product(p_to_s(a), p_to_s(b)));
}

CobordismClass product_p_basis_oracle(const CobordismClass& a, const CobordismClass& b) {
  const int weight = a.weight() + b.weight();
  PartitionVector numbers(weight);
  const auto& parts = partitions_of(weight);
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    const auto lambda = parts[idx].parts();
    // Each factor p_{lambda_t}(A x B) contributes p_i(A) (x) p_{lambda_t - i}(B).
    std::vector<int> split(lambda.size(), 0);
    Rational acc = 0;
    for (;;) {
      std::vector<int> left, right;
      int left_weight = 0;
      for (std::size_t t = 0; t < lambda.size(); ++t) {
        left.push_back(split[t]);
        right.push_back(lambda[t] - split[t]);
        left_weight += split[t];
      }
      if (left_weight == a.weight())
        acc += a.number(Partition::from_unsorted(left)) * b.number(Partition::from_unsorted(right));

      std::size_t t = 0;
      while (t < lambda.size() && split[t] == lambda[t]) split[t++] = 0;
      if (t == lambda.size()) break;
      ++split[t];
    }
    numbers[idx] = std::move(acc);
  }
  return CobordismClass(std::move(numbers));
}

CobordismClass basis_class(const Partition& lambda, int max_weight) {
  if (lambda.weight() > max_weight)
    throw OutOfRange("basis_class: weight " + std::to_string(lambda.weight()) + " exceeds " +
                     std::to_string(max_weight));
  SNumberVector s = p_to_s(point_class());
  for (int part : lambda.parts()) s = s_product(s, p_to_s(generator(part, max_weight)));
  return s_to_p(s);
}

Rational s_top_number(const CobordismClass& c) {
  if (c.weight() == 0) return 0;
  return p_to_s(c).number(Partition{c.weight()});
}

RationalMatrix basis_matrix(int k, int max_weight) {
  check_weight("basis_matrix", k, max_weight);
  const auto& parts = partitions_of(k);
  RationalMatrix m(0, parts.size());
  for (const Partition& lambda : parts) m.append_row(basis_class(lambda, max_weight).p_numbers().values());
  return m;
}

GenusPolynomial ahat_polynomial(int k, int max_weight) {
  check_weight("ahat_polynomial", k, max_weight);
  return msequence_polynomial(ahat_series(static_cast<std::size_t>(k)), k);
}

GenusPolynomial l_polynomial(int k, int max_weight) {
  check_weight("l_polynomial", k, max_weight);
  return msequence_polynomial(l_series(static_cast<std::size_t>(k)), k);
}

Rational evaluate_genus(const GenusPolynomial& g, const CobordismClass& c) {
  return evaluate_genus(g, c.p_numbers());
}

}  // namespace charnum
