#include "doctest.h"

#include "expression_corpus.hpp"
#include "random_maps.hpp"
#include "ratsemi/algebra.hpp"
#include "ratsemi/expression.hpp"
#include "ratsemi/halfplane.hpp"
#include "sample_maps.hpp"

using namespace ratsemi;
using namespace ratsemi::testing;

namespace {

Expr parsed(const std::string& s) { return *parse_map(s).root; }

}  // namespace

TEST_CASE("corpus round-trips through the canonical printer") {
  CHECK(expression_corpus().size() == 50);
  for (const std::string& s : expression_corpus()) {
    const MapExpression e = parse_map(s);
    const std::string printed = print(*e.root);
    CAPTURE(s);
    CAPTURE(printed);
    CHECK(parsed(printed) == *e.root);
    CHECK(print(parsed(printed)) == printed);
    CHECK(equals(lower(parsed(printed)), lower(*e.root)));
  }
}

TEST_CASE("lowering is exact") {
  CHECK(equals(parse_and_lower("((z^2-1)/(z^2+1))"), halfplane_link()));
  CHECK(parse_and_lower("2*z - 1/z") == odd_f());
  CHECK(parse_and_lower("(z^2-1)/(2*z)") == odd_g());
  CHECK(parse_and_lower("z^2-2") == cheb2());
  CHECK(parse_and_lower("0.5*z - 0.5/z") == odd_g());
  CHECK(parse_and_lower("(3z+5z^2)/(1+3z+4z^2)") == lift(odd_f()));
  CHECK(parse_and_lower("(z-i)*(z+i)") == parse_and_lower("z^2+1"));
  CHECK(parse_and_lower("0.1").num().coeffs()[0] == GaussianRational(Rational(1, 10)));
  CHECK(parse_and_lower("z^0") == RationalMap::constant(GaussianRational(1)));
}

TEST_CASE("syntax errors report offset and expectations") {
  try {
    (void)parse_map("z^");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(e.expected() == std::vector<std::string>{"integer exponent"});
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
  const std::vector<std::pair<std::string, std::size_t>> bad{
      {"", 0}, {"z+", 2}, {"(z", 2}, {"z)", 1}, {"2..5", 2}, {"z^-1", 2}, {"x", 0}, {"z z", 2}, {"z^99999", 2}, {"*z", 0}};
  for (const auto& [text, offset] : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_map(text), ParseError);
    try {
      (void)parse_map(text);
    } catch (const ParseError& e) {
      CHECK(e.offset() == offset);
      CHECK(!e.expected().empty());
    }
  }
}

TEST_CASE("division by the zero polynomial is a lowering error") {
  CHECK_THROWS_AS(parse_and_lower("z/0"), LoweringError);
  CHECK_THROWS_AS(parse_and_lower("1/(z-z)"), LoweringError);
  CHECK_NOTHROW(parse_map("1/(z-z)"));
}

TEST_CASE("integral form") {
  CHECK(integral_form(lift(odd_f())) == "(5*z^2+3*z)/(4*z^2+3*z+1)");
  CHECK(integral_form(lift(odd_g())) == "2*z^2-1");
  CHECK(integral_form(lift(odd_g2())) == "(37*z^2-24*z+3)/(35*z^2-24*z+5)");
  CHECK(integral_form(odd_g()) == "(z^2-1)/(2*z)");
  CHECK(integral_form(odd_f()) == "(2*z^2-1)/z");
  CHECK(integral_form(parse_and_lower("z^2/2-1/2")) == "(z^2-1)/2");

  MapGenerator gen(5);
  for (int k = 0; k < 200; ++k) {
    const RationalMap f = gen.map(5);
    CAPTURE(integral_form(f));
    CHECK(parse_and_lower(integral_form(f)) == f);
    CHECK(parse_and_lower(f.to_string()) == f);
  }
}
