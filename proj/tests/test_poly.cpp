#include <doctest.h>

#include "generators.hpp"
#include "germlab/error.hpp"
#include "germlab/poly.hpp"

using namespace germlab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse produces canonical polynomials") {
  const VarList xy{"x", "y"};
  CHECK(parse_polynomial("y^3 - x^2*y", xy).to_string() == "-x^2*y + y^3");
  CHECK(parse_polynomial("x*y + y*x", xy).to_string() == "2*x*y");
  const Poly zero = parse_polynomial("0", VarList{"x"});
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());
  CHECK(parse_polynomial("1/2*x - 3/6*x + (x+y)^2", xy).to_string() == "x^2 + 2*x*y + y^2");
  CHECK(parse_polynomial("-(x - 1)", xy).to_string() == "-x + 1");
}

TEST_CASE("parse errors carry codes") {
  const VarList xy{"x", "y"};
  CHECK(code_of([&] { parse_polynomial("x +", xy); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_polynomial("x y", xy); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_polynomial("z", xy); }) == ErrorCode::UnknownVariable);
  CHECK(code_of([&] { parse_polynomial("x^-2", xy); }) == ErrorCode::NegativeExponent);
  CHECK(code_of([&] { parse_polynomial("1/0", xy); }) == ErrorCode::SyntaxError);
  try {
    parse_polynomial("x + * y", xy);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("variable lists reject duplicates and overflow") {
  CHECK(code_of([] { VarList({"x", "x"}); }) == ErrorCode::VariableConflict);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("v" + std::to_string(i));
  CHECK(code_of([&] { VarList v(many); }) == ErrorCode::TooManyVariables);
}

TEST_CASE("substitution") {
  const VarList y{"y"};
  const VarList y1{"y1"};
  Assignment rename{{"y", Poly::variable(y1, 0)}};
  CHECK(substitute(parse_polynomial("y^2", y), rename, y1).to_string() == "y1^2");

  const VarList xyt{"x", "y", "t"};
  const Poly ruas = parse_polynomial("x^5*y-5*x^3*y^3+4*x*y^5+y^6+t*y^7", xyt);
  const Poly at_zero = substitute(ruas, {{"t", Rational(0)}});
  CHECK(at_zero == parse_polynomial("x^5*y-5*x^3*y^3+4*x*y^5+y^6", VarList{"x", "y"}));

  const VarList xy{"x", "y"};
  CHECK(substitute(parse_polynomial("y^3-x^2*y", xy), {{"x", Rational(0)}}).to_string() == "y^3");
  CHECK(substitute(parse_polynomial("x", xy), {{"q", Rational(3)}}).to_string() == "x");
}

TEST_CASE("substitution rejects conflicting targets") {
  const VarList xy{"x", "y"};
  const VarList only_y{"y"};
  CHECK(code_of([&] {
          substitute(parse_polynomial("x*y", xy), {{"y", Poly::variable(only_y, 0)}}, only_y);
        }) == ErrorCode::VariableConflict);
}

TEST_CASE("jacobian minors") {
  const VarList xy{"x", "y"};
  const std::vector<Poly> g{parse_polynomial("y^2-x^3", xy)};
  const std::vector<Poly> p{parse_polynomial("y", xy)};
  const auto minors = jacobian_minor_ideal(g, p);
  REQUIRE(minors.size() == 1);
  CHECK(minors[0].to_string() == "-3*x^2");

  const std::vector<Poly> none;
  const std::vector<Poly> lin{parse_polynomial("x", xy)};
  const auto unit = jacobian_minor_ideal(none, lin);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].to_string() == "1");

  const VarList xyz{"x", "y", "z"};
  const std::vector<Poly> two{parse_polynomial("x*y", xyz), parse_polynomial("x-y", xyz)};
  const auto m = jacobian_minor_ideal(two, none);
  // Columns (x,y): det [[y,x],[1,-1]] = -x - y; columns involving z vanish.
  REQUIRE(m.size() == 1);
  CHECK(m[0] == parse_polynomial("-x-y", xyz));

  const std::vector<Poly> three{parse_polynomial("x", xy), parse_polynomial("y", xy),
                                parse_polynomial("x*y", xy)};
  CHECK(code_of([&] { jacobian_minor_ideal(three, none); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("determinant by cofactors matches a hand expansion") {
  const VarList xy{"x", "y"};
  auto P = [&](const char* s) { return parse_polynomial(s, xy); };
  const std::vector<std::vector<Poly>> m{{P("x"), P("1"), P("0")},
                                         {P("y"), P("x"), P("1")},
                                         {P("0"), P("y"), P("x")}};
  // x(x^2 - y) - 1(yx - 0) = x^3 - 2xy
  CHECK(determinant(m, xy) == P("x^3 - 2*x*y"));
}

TEST_CASE("difference quotients") {
  const VarList v{"x", "y1", "y2"};
  CHECK(difference_quotient(parse_polynomial("y1^2", v), 1, 2) == parse_polynomial("y1+y2", v));
  CHECK(difference_quotient(parse_polynomial("x*y1", v), 1, 2) == parse_polynomial("x", v));
  CHECK(difference_quotient(parse_polynomial("y1^3-x^2*y1", v), 1, 2) ==
        parse_polynomial("y1^2+y1*y2+y2^2-x^2", v));
}

TEST_CASE("exact division") {
  const VarList xy{"x", "y"};
  const Poly a = parse_polynomial("x^2-y^2", xy);
  CHECK(a.divide_exact(parse_polynomial("x-y", xy)) == parse_polynomial("x+y", xy));
  CHECK(code_of([&] { a.divide_exact(parse_polynomial("x", xy)); }) ==
        ErrorCode::NotExactDivision);
}

TEST_CASE("property: ring axioms on random polynomials") {
  const VarList v{"x", "y", "z"};
  SeededSampler rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = gen::small_poly(rng, v);
    const Poly b = gen::small_poly(rng, v);
    const Poly c = gen::small_poly(rng, v);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("property: print then parse is the identity") {
  const VarList v{"x", "y", "z"};
  SeededSampler rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = gen::small_poly(rng, v, 6, 5);
    CHECK(parse_polynomial(a.to_string(), v) == a);
  }
}

TEST_CASE("property: substitution is a ring homomorphism") {
  const VarList v{"x", "y", "z"};
  const VarList w{"s", "t"};
  SeededSampler rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = gen::small_poly(rng, v);
    const Poly b = gen::small_poly(rng, v);
    Assignment sigma{{"x", gen::small_poly(rng, w, 3, 2)},
                     {"y", gen::small_poly(rng, w, 3, 2)},
                     {"z", Rational(rng.uniform(-3, 3))}};
    CHECK(substitute(a * b, sigma, w) == substitute(a, sigma, w) * substitute(b, sigma, w));
    CHECK(substitute(a + b, sigma, w) == substitute(a, sigma, w) + substitute(b, sigma, w));
  }
}

TEST_CASE("property: difference quotient times the difference recovers the difference") {
  const VarList v{"x", "a", "b"};
  SeededSampler rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = gen::small_poly(rng, v, 5, 4);
    const Poly q = difference_quotient(p, 1, 2);
    const Poly swapped = substitute(p, {{"a", Poly::variable(v, 2)}}, v);
    CHECK(q * parse_polynomial("a-b", v) == p - swapped);
  }
}
