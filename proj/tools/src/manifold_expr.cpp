#include <charnum/cli/manifold_expr.hpp>

#include <charnum/error.hpp>

#include <cctype>
#include <limits>

namespace charnum::cli {

ManifoldExpr ManifoldExpr::kummer() { return ManifoldExpr(Kind::kummer, 0, {}); }

ManifoldExpr ManifoldExpr::quaternionic(int k) {
  if (k < 1) throw OutOfRange("HP index must be >= 1");
  return ManifoldExpr(Kind::quaternionic, k, {});
}

ManifoldExpr ManifoldExpr::product(ManifoldExpr lhs, ManifoldExpr rhs) {
  std::vector<ManifoldExpr> children;
  children.push_back(std::move(lhs));
  children.push_back(std::move(rhs));
  return ManifoldExpr(Kind::product, 0, std::move(children));
}

ManifoldExpr ManifoldExpr::power(ManifoldExpr base, int exponent) {
  if (exponent < 1) throw OutOfRange("exponent must be >= 1");
  std::vector<ManifoldExpr> children;
  children.push_back(std::move(base));
  return ManifoldExpr(Kind::power, exponent, std::move(children));
}

std::int64_t ManifoldExpr::weight() const {
  constexpr std::int64_t kSaturate = std::numeric_limits<std::int32_t>::max();
  switch (kind_) {
    case Kind::kummer:
      return 1;
    case Kind::quaternionic:
      return value_;
    case Kind::product:
      return std::min(kSaturate, first().weight() + second().weight());
    case Kind::power:
      return std::min(kSaturate, first().weight() * value_);
  }
  return 0;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ManifoldExpr parse() {
    ManifoldExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("expected 'x', '*' or end of input");
    return e;
  }

 private:
  ManifoldExpr expr() {
    ManifoldExpr lhs = term();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && (peek() == 'x' || peek() == 'X' || peek() == '*')) {
        ++pos_;
        lhs = ManifoldExpr::product(std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  ManifoldExpr term() {
    ManifoldExpr base = atom();
    skip_space();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      return ManifoldExpr::power(std::move(base), posint("exponent"));
    }
    return base;
  }

  ManifoldExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected 'K3', 'HP' or '('");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(peek())));
    if (c == '(') {
      ++pos_;
      ManifoldExpr inner = expr();
      skip_space();
      if (pos_ >= text_.size() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (keyword("K3")) return ManifoldExpr::kummer();
    if (keyword("HP")) return ManifoldExpr::quaternionic(posint("HP index"));
    fail("expected 'K3', 'HP' or '('");
  }

  bool keyword(std::string_view word) {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != word[i]) return false;
    pos_ += word.size();
    return true;
  }

  int posint(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<std::int32_t>::max()) fail_at(start, std::string(what) + " is too large");
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected positive integer (") + what + ")");
    if (value < 1) fail_at(start, std::string(what) + " must be >= 1");
    return static_cast<int>(value);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(pos + 1, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ManifoldExpr parse_manifold(std::string_view text) { return Parser(text).parse(); }

std::string render(const ManifoldExpr& expr) {
  using Kind = ManifoldExpr::Kind;
  switch (expr.kind()) {
    case Kind::kummer:
      return "K3";
    case Kind::quaternionic:
      return "HP" + std::to_string(expr.value());
    case Kind::product: {
      std::string rhs = render(expr.second());
      if (expr.second().kind() == Kind::product) rhs = "(" + rhs + ")";
      return render(expr.first()) + " x " + rhs;
    }
    case Kind::power: {
      std::string base = render(expr.first());
      const Kind inner = expr.first().kind();
      if (inner == Kind::product || inner == Kind::power) base = "(" + base + ")";
      return base + "^" + std::to_string(expr.value());
    }
  }
  return {};
}

namespace {

CobordismClass evaluate_unchecked(const ManifoldExpr& expr, int max_weight) {
  using Kind = ManifoldExpr::Kind;
  switch (expr.kind()) {
    case Kind::kummer:
      return kummer_class();
    case Kind::quaternionic:
      return quaternionic_class(expr.value(), max_weight);
    case Kind::product:
      return product(evaluate_unchecked(expr.first(), max_weight),
                     evaluate_unchecked(expr.second(), max_weight));
    case Kind::power: {
      const CobordismClass base = evaluate_unchecked(expr.first(), max_weight);
      CobordismClass out = base;
      for (int i = 1; i < expr.value(); ++i) out = product(out, base);
      return out;
    }
  }
  return point_class();
}

}  // namespace

CobordismClass evaluate(const ManifoldExpr& expr, int max_weight) {
  if (expr.weight() > max_weight)
    throw OutOfRange("manifold has weight " + std::to_string(expr.weight()) +
                     ", which exceeds the cap " + std::to_string(max_weight));
  return evaluate_unchecked(expr, max_weight);
}

}  // namespace charnum::cli
