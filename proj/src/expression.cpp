#include "ratsemi/expression.hpp"

#include <algorithm>
#include <cctype>

namespace ratsemi {

namespace {

ExprPtr node(Expr::Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr number(Rational value) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Number;
  e->number = std::move(value);
  return e;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += k + 1 == items.size() ? " or " : ", ";
    out += items[k];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+')) {
        e = node(Expr::Kind::Add, e, term());
      } else if (accept('-')) {
        e = node(Expr::Kind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (accept('*')) {
        e = node(Expr::Kind::Mul, e, unary());
      } else if (accept('/')) {
        e = node(Expr::Kind::Div, e, unary());
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) return node(Expr::Kind::Neg, unary());
    return power();
  }

  ExprPtr power() {
    ExprPtr b = base();
    if (!accept('^')) return b;
    skip_space();
    if (!at_digit()) fail({"integer exponent"});
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (at_digit()) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      ++pos_;
      if (value > kMaxExponent) {
        pos_ = start;
        fail({"integer exponent at most " + std::to_string(kMaxExponent)});
      }
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->lhs = std::move(b);
    e->exponent = static_cast<unsigned>(value);
    return e;
  }

  ExprPtr base() {
    skip_space();
    if (at_digit()) {
      ExprPtr n = literal();
      // Implicit product: 2z, 3(z+1), 2z^2.
      if (pos_ < text_.size() && (text_[pos_] == 'z' || text_[pos_] == '(')) return node(Expr::Kind::Mul, n, power());
      return n;
    }
    if (accept('z')) return node(Expr::Kind::Var);
    if (accept('i')) return node(Expr::Kind::Imag);
    if (accept('(')) {
      ExprPtr e = expr();
      if (!accept(')')) fail({"operator", "')'"});
      return e;
    }
    fail({"number", "'z'", "'i'", "'('", "'-'"});
  }

  ExprPtr literal() {
    std::string digits;
    std::size_t scale = 0;
    while (at_digit()) digits += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (!at_digit()) fail({"digit"});
      while (at_digit()) {
        digits += text_[pos_++];
        ++scale;
      }
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    Rational value(num, den);
    value.canonicalize();
    return number(std::move(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string decimal(const Rational& q) {
  // Literals only ever denote terminating decimals: den = 2^a 5^b.
  mpz_class rest = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return q.get_str();
  const unsigned long scale = std::max(twos, fives);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, scale);
  std::string digits = mpz_class(q.get_num() * ten_pow / q.get_den()).get_str();
  if (scale == 0) return digits;
  if (digits.size() <= scale) digits.insert(0, scale - digits.size() + 1, '0');
  digits.insert(digits.size() - scale, ".");
  return digits;
}

std::string print_at(const Expr& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::Number:
      s = decimal(e.number);
      break;
    case Expr::Kind::Imag:
      s = "i";
      break;
    case Expr::Kind::Var:
      s = "z";
      break;
    case Expr::Kind::Neg:
      s = "-" + print_at(*e.lhs, 3);
      break;
    case Expr::Kind::Add:
      s = print_at(*e.lhs, 1) + "+" + print_at(*e.rhs, 2);
      break;
    case Expr::Kind::Sub:
      s = print_at(*e.lhs, 1) + "-" + print_at(*e.rhs, 2);
      break;
    case Expr::Kind::Mul:
      s = print_at(*e.lhs, 2) + "*" + print_at(*e.rhs, 3);
      break;
    case Expr::Kind::Div:
      s = print_at(*e.lhs, 2) + "/" + print_at(*e.rhs, 3);
      break;
    case Expr::Kind::Pow:
      s = print_at(*e.lhs, 5) + "^" + std::to_string(e.exponent);
      break;
  }
  return precedence(e.kind) < min_prec ? "(" + s + ")" : s;
}

RationalMap power(const RationalMap& f, unsigned k) {
  RationalMap acc = RationalMap::constant(GaussianRational(1));
  RationalMap base = f;
  while (k > 0) {
    if (k & 1U) acc = product(acc, base);
    k >>= 1U;
    if (k > 0) base = product(base, base);
  }
  return acc;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.exponent != b.exponent || a.number != b.number) return false;
  auto same = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": expected " + join(expected) +
                            ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

MapExpression parse_map(std::string_view text) { return {std::string(text), Parser(text).parse()}; }

std::string print(const Expr& e) { return print_at(e, 0); }

RationalMap lower(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return RationalMap::constant(GaussianRational(e.number));
    case Expr::Kind::Imag:
      return RationalMap::constant(GaussianRational::i());
    case Expr::Kind::Var:
      return RationalMap::identity();
    case Expr::Kind::Neg:
      return -lower(*e.lhs);
    case Expr::Kind::Add:
      return sum(lower(*e.lhs), lower(*e.rhs));
    case Expr::Kind::Sub:
      return sum(lower(*e.lhs), -lower(*e.rhs));
    case Expr::Kind::Mul:
      return product(lower(*e.lhs), lower(*e.rhs));
    case Expr::Kind::Div: {
      const RationalMap d = lower(*e.rhs);
      if (d.num().is_zero()) throw LoweringError("division by the zero polynomial in '" + print(e) + "'");
      return product(lower(*e.lhs), RationalMap::normalize(d.den(), d.num()));
    }
    case Expr::Kind::Pow:
      return power(lower(*e.lhs), e.exponent);
  }
  throw LoweringError("unknown expression node");
}

RationalMap parse_and_lower(std::string_view text) { return lower(*parse_map(text).root); }

std::string integral_form(const RationalMap& f) {
  mpz_class common = 1;
  auto visit = [](const Polynomial& p, auto&& fn) {
    for (const auto& c : p.coeffs()) {
      fn(c.re());
      fn(c.im());
    }
  };
  auto take_den = [&](const Rational& q) { common = lcm(common, q.get_den()); };
  visit(f.num(), take_den);
  visit(f.den(), take_den);
  mpz_class content = 0;
  auto take_num = [&](const Rational& q) { content = gcd(content, mpz_class(q * common)); };
  visit(f.num(), take_num);
  visit(f.den(), take_num);
  const GaussianRational scale(Rational(common, content));

  const Polynomial num = f.num() * scale;
  const Polynomial den = f.den() * scale;
  if (den.degree() == 0 && den.coeffs()[0].is_one()) return num.to_string();

  auto terms = [](const Polynomial& p) {
    int n = 0;
    for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
    return n;
  };
  std::string n = num.to_string();
  std::string d = den.to_string();
  if (terms(num) > 1) n = "(" + n + ")";
  // A bare integer or a bare power of z can follow '/' unparenthesized.
  const bool bare = den.degree() == 0 || (terms(den) == 1 && den.leading().is_one());
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace ratsemi
