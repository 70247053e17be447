#include <doctest.h>

#include "nugcd/polynomial.hpp"
#include "oracles.hpp"

using namespace nugcd;

namespace {

Polynomial real_poly(std::initializer_list<double> c) { return Polynomial::from_real(c); }

void check_close(const Polynomial& a, const std::vector<Complex>& b, double tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol);
}

}  // namespace

TEST_CASE("construction rejects a zero leading coefficient") {
  CHECK_THROWS_AS(real_poly({1.0, 0.0}), Error);
  CHECK_THROWS_AS(real_poly({1.0, std::nan("")}), Error);
  const Polynomial tiny = real_poly({1.0, 1e-300});
  CHECK(tiny.degree() == 1);
  CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial::structural({Complex(1.0), Complex(0.0)}).degree() == 1);
}

TEST_CASE("pair members must be nonzero") {
  CHECK_THROWS_AS(PolynomialPair(Polynomial(), real_poly({1.0})), Error);
  const PolynomialPair pair(real_poly({1.0, 2.0}), real_poly({3.0}));
  CHECK(pair.m() == 1);
  CHECK(pair.n() == 0);
}

TEST_CASE("multiply") {
  const Polynomial p = real_poly({2.0, -1.0, 0.5, 3.0});
  SUBCASE("identity") {
    const Polynomial r = multiply(real_poly({1.0}), p);
    check_close(r, oracle::coeffs(p), 0.0);
  }
  SUBCASE("zero factor") {
    CHECK(multiply(Polynomial(), p).is_zero());
    CHECK(multiply(p, Polynomial()).is_zero());
  }
  SUBCASE("(x+10)(x^9+x^8/3+1)") {
    const Polynomial a = real_poly({10.0, 1.0});
    const Polynomial b = real_poly({1.0, 0, 0, 0, 0, 0, 0, 0, 1.0 / 3.0, 1.0});
    const Polynomial f = multiply(a, b);
    CHECK(f.degree() == 10);
    const std::vector<Complex> expect{10.0, 1.0, 0, 0, 0, 0, 0, 0, 10.0 / 3.0, 31.0 / 3.0, 1.0};
    check_close(f, expect, 1e-14);
  }
  SUBCASE("matches direct convolution") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
      const Polynomial a = oracle::random_integer(5, rng);
      const Polynomial b = oracle::random_integer(4, rng);
      check_close(multiply(a, b), oracle::convolve(oracle::coeffs(a), oracle::coeffs(b)), 0.0);
    }
  }
}

TEST_CASE("multiply is commutative and associative") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Polynomial a = oracle::random_unit(4, rng);
    const Polynomial b = oracle::random_unit(6, rng);
    const Polynomial c = oracle::random_unit(3, rng);
    const Polynomial ab_c = multiply(multiply(a, b), c);
    const Polynomial a_bc = multiply(a, multiply(b, c));
    const Polynomial ba = multiply(b, a);
    const double scale = norm(ab_c);
    CHECK(norm(Polynomial::structural(difference(ab_c, a_bc))) <= 1e-13 * scale);
    CHECK(norm(Polynomial::structural(difference(multiply(a, b), ba))) <= 1e-13 * norm(ba));
  }
}

TEST_CASE("product norm bound") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const int da = 1 + t % 7;
    const int db = 1 + (t * 3) % 5;
    const Polynomial a = oracle::random_unit(da, rng);
    const Polynomial b = oracle::random_unit(db, rng);
    const double bound = std::sqrt(std::min(da, db) + 1.0) * norm(a) * norm(b);
    CHECK(norm(multiply(a, b)) <= bound * (1.0 + 1e-14));
  }
}

TEST_CASE("norm") {
  CHECK(norm(Polynomial()) == 0.0);
  CHECK(norm(real_poly({3.0, -4.0})) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm(real_poly({1e200, 1e200})) == doctest::Approx(std::sqrt(2.0) * 1e200));
  CHECK(norm(real_poly({1e-200, 1e-200})) == doctest::Approx(std::sqrt(2.0) * 1e-200));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Polynomial p = oracle::random_integer(12, rng, -1000, 1000).scaled(Complex(0.37, -1.1));
    const double expect = oracle::compensated_norm(oracle::coeffs(p));
    CHECK(std::abs(norm(p) - expect) <= 4e-16 * expect);
  }
}

TEST_CASE("pair distance") {
  const PolynomialPair a(real_poly({1.0, 2.0, 3.0}), real_poly({4.0, 5.0}));
  CHECK(pair_distance(a, a) == 0.0);

  // (x^2-3x+2)(x+1) + 0.01 and (x^2-3x+2)(x+1.2) - 0.01 against the exact products.
  const Polynomial g = real_poly({2.0, -3.0, 1.0});
  const PolynomialPair exact(multiply(g, real_poly({1.0, 1.0})), multiply(g, real_poly({1.2, 1.0})));
  auto shifted = [](const Polynomial& f, double c) {
    std::vector<Complex> v = oracle::coeffs(f);
    v[0] += c;
    return Polynomial(std::move(v));
  };
  const PolynomialPair perturbed(shifted(exact.p, 0.01), shifted(exact.q, -0.01));
  CHECK(pair_distance(perturbed, exact) == doctest::Approx(std::sqrt(0.0002)).epsilon(1e-12));
  CHECK(pair_distance(perturbed, exact) == doctest::Approx(0.01414).epsilon(1e-3));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const PolynomialPair x(oracle::random_unit(6, rng), oracle::random_unit(3, rng));
    const PolynomialPair y(oracle::random_unit(4, rng), oracle::random_unit(5, rng));
    std::vector<Complex> cat;
    for (int i = 0; i <= 6; ++i) cat.push_back(x.p[i] - (i <= 4 ? y.p[i] : Complex(0.0)));
    for (int i = 0; i <= 5; ++i) cat.push_back((i <= 3 ? x.q[i] : Complex(0.0)) - y.q[i]);
    const double expect = oracle::compensated_norm(cat);
    CHECK(std::abs(pair_distance(x, y) - expect) <= 1e-15 * expect);
  }
}

TEST_CASE("evaluate") {
  CHECK(std::abs(evaluate(real_poly({10.0, 1.0}), -10.0)) == 0.0);
  CHECK(std::abs(evaluate(real_poly({1.0, 0.0, 1.0}), Complex(0.0, 1.0))) == 0.0);
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    const Polynomial p = oracle::random_unit(8, rng);
    const Complex x(g(rng), g(rng));
    const Complex expect = oracle::power_sum(p, x);
    CHECK(std::abs(evaluate(p, x) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)) *
                                                    std::pow(1.0 + std::abs(x), 8));
  }
}

TEST_CASE("evaluation is multiplicative") {
  std::mt19937_64 rng(10);
  std::normal_distribution<double> g;
  for (int t = 0; t < 30; ++t) {
    const Polynomial a = oracle::random_unit(5, rng);
    const Polynomial b = oracle::random_unit(4, rng);
    const Complex x(g(rng), g(rng));
    const Complex lhs = evaluate(multiply(a, b), x);
    const Complex rhs = evaluate(a, x) * evaluate(b, x);
    // relative to the size of the terms being summed
    const double scale = std::pow(1.0 + std::abs(x), 9);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("derivative and monic") {
  const Polynomial p = real_poly({1.0, 2.0, 3.0});
  check_close(p.derivative(), {2.0, 6.0}, 0.0);
  CHECK(real_poly({5.0}).derivative().is_zero());
  check_close(monic(real_poly({2.0, 4.0})), {0.5, 1.0}, 0.0);
  CHECK_THROWS_AS(monic(Polynomial()), Error);
}
