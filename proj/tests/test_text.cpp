#include <doctest.h>

#include "nugcd/text.hpp"
#include "oracles.hpp"

using namespace nugcd;

namespace {

void check_coeffs(const Polynomial& p, const std::vector<Complex>& expect) {
  REQUIRE(p.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(p[i] == expect[i]);
}

std::size_t error_position(std::string_view text) {
  try {
    parse_polynomial(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for '" << text << "'");
  return 0;
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(parse_complex("2") == Complex(2.0));
  CHECK(parse_complex("-1.5e-3") == Complex(-1.5e-3));
  CHECK(parse_complex("3-4i") == Complex(3.0, -4.0));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex(" .5 ") == Complex(0.5));
  CHECK(parse_complex("10.") == Complex(10.0));
  CHECK_THROWS_AS(parse_complex(""), ParseError);
  CHECK_THROWS_AS(parse_complex("3x"), ParseError);
  CHECK_THROWS_AS(parse_complex("."), ParseError);
}

TEST_CASE("coefficient lists") {
  check_coeffs(parse_polynomial("10 1"), {10.0, 1.0});
  check_coeffs(parse_polynomial("  1+2i  0\t-3 "), {Complex(1.0, 2.0), 0.0, -3.0});
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1 0"), ParseError);
  CHECK(error_position("1 2 abc") == 4);
  CHECK(error_position("1 0") == 2);
}

TEST_CASE("expressions") {
  check_coeffs(parse_polynomial("x+10"), {10.0, 1.0});
  check_coeffs(parse_polynomial("x^2+3*x+2"), {2.0, 3.0, 1.0});
  check_coeffs(parse_polynomial("(1+2i)*x^2-3"), {-3.0, 0.0, Complex(1.0, 2.0)});
  check_coeffs(parse_polynomial("2x - x"), {0.0, 1.0});
  check_coeffs(parse_polynomial("(2-i)"), {Complex(2.0, -1.0)});
  CHECK(parse_polynomial("x - x").is_zero());
  check_coeffs(parse_polynomial("-x^3*2 + i"), {Complex(0.0, 1.0), 0.0, 0.0, -2.0});

  const Polynomial p =
      parse_polynomial("x^10+10.33333333*x^9+3.333333333*x^8+x+10.");
  check_coeffs(p, {10.0, 1.0, 0, 0, 0, 0, 0, 0, 3.333333333, 10.33333333, 1.0});
  const Polynomial q =
      parse_polynomial("x^10+10.14285714*x^9+1.428571429*x^8-.8571428571*x-8.571428571");
  check_coeffs(q, {-8.571428571, -.8571428571, 0, 0, 0, 0, 0, 0, 1.428571429, 10.14285714, 1.0});
}

TEST_CASE("expression errors carry positions") {
  CHECK(error_position("x^") == 2);
  CHECK(error_position("x^1.5") == 2);
  CHECK(error_position("x + * 2") == 4);
  CHECK(error_position("(1+2i x") == 6);
  CHECK(error_position("x x") == 2);
  CHECK_THROWS_AS(parse_polynomial("x*"), ParseError);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = oracle::random_unit(t % 9, rng).scaled(Complex(std::pow(10.0, t % 7 - 3)));
    const Polynomial a = parse_polynomial(format_coefficients(p));
    const Polynomial b = parse_polynomial(format_expression(p));
    REQUIRE(a.size() == p.size());
    REQUIRE(b.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(a[i] == p[i]);
      CHECK(b[i] == p[i]);
    }
  }
  const Polynomial c = parse_polynomial("(1+2i)*x^2-3");
  CHECK(format_expression(c) == "(-3)+(1+2i)*x^2");
  CHECK(format_coefficients(c) == "-3 0 1+2i");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_complex(Complex(0.0, -1.0)) == "-1i");
  CHECK(format_coefficients(Polynomial()) == "0");
}
