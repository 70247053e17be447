#include <doctest.h>

#include "nugcd/sylvester.hpp"
#include "oracles.hpp"

using namespace nugcd;

namespace {

Polynomial real_poly(std::initializer_list<double> c) { return Polynomial::from_real(c); }

DenseMatrix permute(const DenseMatrix& s, const std::vector<int>& perm) {
  DenseMatrix out(s.rows(), s.cols());
  for (std::size_t c = 0; c < perm.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = s.col(perm[c]);
  return out;
}

PolynomialPair oriented_random(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  int m = deg(rng);
  int n = deg(rng);
  if (m < n) std::swap(m, n);
  return {oracle::random_unit(m, rng), oracle::random_unit(n, rng)};
}

}  // namespace

TEST_CASE("conv_matrix") {
  SUBCASE("constant one gives identity") {
    CHECK(conv_matrix(real_poly({1.0}), 3).isApprox(DenseMatrix::Identity(4, 4)));
  }
  SUBCASE("x+10 band") {
    const DenseMatrix c = conv_matrix(real_poly({10.0, 1.0}), 9);
    REQUIRE(c.rows() == 11);
    REQUIRE(c.cols() == 10);
    for (int i = 0; i < 11; ++i) {
      for (int j = 0; j < 10; ++j) {
        const Complex expect = i == j ? 10.0 : (i == j + 1 ? 1.0 : 0.0);
        CHECK(c(i, j) == expect);
      }
    }
  }
  SUBCASE("matches multiply") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
      const Polynomial f = oracle::random_unit(1 + t % 6, rng);
      const Polynomial g = oracle::random_unit(t % 5, rng);
      const DenseVector prod = conv_matrix(f, g.degree()) * to_vector(g);
      const DenseVector expect = to_vector(multiply(f, g));
      CHECK((prod - expect).norm() <= 1e-14 * expect.norm());
      CHECK(conv_matrix(f, g.degree()).isApprox(oracle::convolution(f, g.degree())));
    }
  }
  CHECK_THROWS_AS(conv_matrix(Polynomial(), 2), Error);
  CHECK_THROWS_AS(conv_matrix(real_poly({1.0}), -1), Error);
}

TEST_CASE("sylvester matrix") {
  const Polynomial p = multiply(real_poly({-1.0, 1.0}), real_poly({-2.0, 1.0}));
  const Polynomial q = multiply(real_poly({-1.0, 1.0}), real_poly({-3.0, 1.0}));
  const PolynomialPair pair(p, q);

  CHECK_THROWS_AS(sylvester(pair, 0), Error);
  CHECK_THROWS_AS(sylvester(pair, 3), Error);

  SUBCASE("shape and entries") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
      const PolynomialPair r(oracle::random_unit(7, rng), oracle::random_unit(4, rng));
      for (int j = 1; j <= 4; ++j) {
        const DenseMatrix s = sylvester(r, j);
        CHECK(s.rows() == 7 + 4 - j + 1);
        CHECK(s.cols() == 7 + 4 - 2 * j + 2);
        CHECK(s.isApprox(oracle::sylvester(r, j)));
      }
    }
  }
  SUBCASE("identical polynomials") {
    const Polynomial f = real_poly({1.0, -2.0, 0.5, 3.0});
    const DenseMatrix s = sylvester(PolynomialPair(f, f), 1);
    CHECK(oracle::smallest_singular_value(s) <= 1e-12 * s.norm());
  }
  SUBCASE("one common root, j = 1") {
    const DenseMatrix s = sylvester(pair, 1);
    CHECK(oracle::nullity(s, 1e-12) == 1);
    DenseVector kernel(4);
    kernel << to_vector(real_poly({-3.0, 1.0})), -to_vector(real_poly({-2.0, 1.0}));
    CHECK(oracle::subspace_distance(oracle::smallest_right_vector(s), kernel) <= 1e-12);
  }
  SUBCASE("j = 2") {
    const DenseMatrix s = sylvester(pair, 2);
    CHECK(s.rows() == 3);
    CHECK(s.cols() == 2);
    CHECK(oracle::smallest_singular_value(s) > 0.1);
  }
}

TEST_CASE("initial factor") {
  SUBCASE("degree 10 against degree 1") {
    const Polynomial f = real_poly({10.0, 1.0, 0, 0, 0, 0, 0, 0, 10.0 / 3.0, 31.0 / 3.0, 1.0});
    const SylvesterQr state(PolynomialPair(f, real_poly({10.0, 1.0})));
    CHECK(state.j() == 1);
    CHECK(state.cols() == 11);
    CHECK(state.r().rows() == 11);
    const DenseMatrix s = oracle::sylvester(state.pair(), 1);
    CHECK(oracle::gram_error(state.r(), permute(s, state.perm())) <= 1e-14);
  }
  SUBCASE("p = q has a zero pivot") {
    const Polynomial f = real_poly({2.0, -1.0, 3.0, 1.0});
    const SylvesterQr state(PolynomialPair(f, f));
    const DenseMatrix r = state.r();
    const double smallest = r.diagonal().cwiseAbs().minCoeff();
    CHECK(smallest <= 1e-14 * r.norm());
  }
  SUBCASE("coprime pair keeps every pivot") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
      const PolynomialPair pair = oriented_random(rng, 10);
      const SylvesterQr state(pair);
      const DenseMatrix s = oracle::sylvester(pair, pair.n());
      CHECK(oracle::smallest_singular_value(s) > 1e-10 * s.norm());
      CHECK(state.r().diagonal().cwiseAbs().minCoeff() > 1e-10 * s.norm());
    }
  }
  SUBCASE("orientation is required") {
    CHECK_THROWS_AS(SylvesterQr(PolynomialPair(real_poly({1.0, 1.0}), real_poly({1.0, 2.0, 1.0}))),
                    Error);
    CHECK_THROWS_AS(SylvesterQr(PolynomialPair(real_poly({1.0, 1.0}), real_poly({2.0}))), Error);
  }
}

TEST_CASE("downdating along a sweep") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const PolynomialPair pair = oriented_random(rng, 12);
    SylvesterQr state(pair);
    for (int j = pair.n();; --j) {
      REQUIRE(state.j() == j);
      const DenseMatrix s = oracle::sylvester(pair, j);
      const DenseMatrix sp = permute(s, state.perm());
      CHECK(state.permuted_sylvester().isApprox(sp));
      CHECK(oracle::gram_error(state.r(), sp) <= 1e-11);

      // R is unique up to the phase of each row.
      const DenseMatrix scratch = Eigen::HouseholderQR<DenseMatrix>(sp).matrixQR()
                                      .topRows(sp.cols())
                                      .triangularView<Eigen::Upper>();
      const DenseMatrix mine = state.r();
      CHECK((mine.cwiseAbs() - scratch.cwiseAbs()).cwiseAbs().maxCoeff() <= 1e-11 * s.norm());

      const double sv_r = oracle::smallest_singular_value(mine);
      const double sv_s = oracle::smallest_singular_value(s);
      CHECK(std::abs(sv_r - sv_s) <= 1e-11 * std::max(sv_s, 1e-3 * s.norm()));
      if (j == 1) break;

      const int cols = state.cols();
      const int square = static_cast<int>(mine.rows());
      state.downdate();
      CHECK(state.cols() == cols + 2);
      CHECK(state.r().rows() == square + 2);
    }
    CHECK_THROWS_AS(state.downdate(), Error);
  }
}

TEST_CASE("nullity follows the gcd degree") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const int k = 1 + t % 4;
    const auto [u, v, w] = oracle::random_triplet(k, 1 + t % 5, 1 + (t * 7) % 4, rng);
    PolynomialPair pair(multiply(u, v), multiply(u, w));
    if (pair.m() < pair.n()) pair = PolynomialPair(pair.q, pair.p);
    for (int j = 1; j <= pair.n(); ++j) {
      const DenseMatrix s = oracle::sylvester(pair, j);
      CHECK(oracle::nullity(s, 1e-10) == (j <= k ? k - j + 1 : 0));
    }
  }
}
