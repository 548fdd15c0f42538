#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ratsemi/rational_map.hpp"

namespace ratsemi {

/// Syntax tree of a map expression. Immutable; subtrees are shared.
struct Expr {
  enum class Kind { Number, Imag, Var, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind;
  Rational number;        // Number
  unsigned exponent = 0;  // Pow
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;

  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

struct MapExpression {
  std::string source;
  ExprPtr root;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Division by the zero polynomial and similar failures after parsing.
class LoweringError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr unsigned kMaxExponent = 4096;

/// expr := term (('+'|'-') term)*
/// term := unary (('*'|'/') unary)*
/// unary := '-' unary | power
/// power := base ('^' integer)?
/// base := number | 'i' | 'z' | '(' expr ')'
/// A number literal directly followed by 'z' or '(' multiplies it. Decimal
/// literals are exact.
MapExpression parse_map(std::string_view text);

/// Canonical text: explicit operators, minimal parentheses, exact decimals.
std::string print(const Expr& e);

RationalMap lower(const Expr& e);
RationalMap parse_and_lower(std::string_view text);

/// Integer-coefficient text of a map, e.g. (5*z^2+3*z)/(4*z^2+3*z+1). Parses
/// back to the same map.
std::string integral_form(const RationalMap& f);

}  // namespace ratsemi
