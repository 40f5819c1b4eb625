#pragma once

#include <charnum/cobordism.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace charnum::cli {

/*
 * Manifold expressions over the generators K3 and HP<k>.
 *
 *   expr := term (('x' | '*') term)*
 *   term := atom ('^' posint)?
 *   atom := 'K3' | 'HP' posint | '(' expr ')'
 *
 * Atom names are case-insensitive; whitespace may separate any two tokens.
 * Products associate to the left.
 */
class ManifoldExpr {
 public:
  enum class Kind { kummer, quaternionic, product, power };

  static ManifoldExpr kummer();
  static ManifoldExpr quaternionic(int k);
  static ManifoldExpr product(ManifoldExpr lhs, ManifoldExpr rhs);
  static ManifoldExpr power(ManifoldExpr base, int exponent);

  Kind kind() const noexcept { return kind_; }
  /// HP index for quaternionic atoms, exponent for powers, 0 otherwise.
  int value() const noexcept { return value_; }
  /// Left factor of a product or base of a power.
  const ManifoldExpr& first() const { return children_.at(0); }
  /// Right factor of a product.
  const ManifoldExpr& second() const { return children_.at(1); }

  /// Sum of atom weights times exponents (K3 -> 1, HP<k> -> k).
  std::int64_t weight() const;

  friend bool operator==(const ManifoldExpr&, const ManifoldExpr&) = default;

 private:
  ManifoldExpr(Kind kind, int value, std::vector<ManifoldExpr> children)
      : kind_(kind), value_(value), children_(std::move(children)) {}

  Kind kind_;
  int value_;
  std::vector<ManifoldExpr> children_;
};

/// Throws ParseError carrying the 1-based column of the offending token.
ManifoldExpr parse_manifold(std::string_view text);

/// Canonical spelling: "K3", "HP2", " x " between factors, "^n" on atoms and
/// parenthesized groups. parse_manifold(render(e)) == e.
std::string render(const ManifoldExpr& expr);

/// Throws OutOfRange if the total weight exceeds max_weight.
CobordismClass evaluate(const ManifoldExpr& expr, int max_weight = kDefaultMaxWeight);

}  // namespace charnum::cli
