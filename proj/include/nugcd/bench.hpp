#ifndef NUGCD_BENCH_HPP
#define NUGCD_BENCH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nugcd/uvgcd.hpp"

namespace nugcd::bench {

/// Regression bounds a case must meet when run by the suite.
struct Expectation {
  std::optional<int> degree;
  std::optional<double> max_error;
  std::optional<double> min_rho;
  std::optional<double> max_rho;
  std::optional<double> max_ms;
};

struct BenchCase {
  std::string name;
  PolynomialPair pair;
  std::optional<Polynomial> true_gcd;
  double epsilon = 1e-10;
  ToleranceMode mode = ToleranceMode::relative;
  std::map<std::string, std::string> metadata;
  Expectation expect;
};

/// Test 1: p = u v, q = u w with roots on circles of radius 0.5 and 1.5.
BenchCase gen_test1(int n);
/// Test 2: one degree-10 pair run at each tolerance of the ladder
/// 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-8, 1e-9, 1e-10.
std::vector<BenchCase> gen_test2();
/// Test 3: u of degree n with random integer coefficients in [-5, 5],
/// v = 1 + x + x^2 + x^3, w = 1 - x + x^2 - x^3 + x^4.
BenchCase gen_test3(int n, std::uint64_t seed);
/// Test 5: degree-15 u with coefficients c_j 10^e_j, c_j in [-5, 5],
/// e_j in [0, 6], and the Test 3 cofactors. zero_exponents forces e_j = 0.
BenchCase gen_test5(std::uint64_t seed, bool zero_exponents = false);
/// Test 6: (p, p') for p = (x-1)^m1 (x-2)^m2 (x-3)^m3 (x-4)^m4.
BenchCase gen_test6(std::array<int, 4> multiplicities);

/// Max coefficient-wise error between monic(computed) and monic(truth):
/// relative where |truth_i| > floor = 1e-3 |truth|, otherwise absolute, or
/// relative to the floor once the floor exceeds 1. Infinity on degree
/// mismatch.
double coefficient_error(const Polynomial& computed, const Polynomial& truth);

struct EuclidStep {
  int remainder_degree = 0;  // Polynomial::kZeroDegree for a zero remainder
  double remainder_norm = 0.0;
};

struct EuclidReport {
  std::vector<EuclidStep> steps;
  /// Last nonzero remainder (a scalar multiple of the computed GCD).
  Polynomial last_nonzero;
};

/// Naive floating-point Euclidean remainder sequence. A remainder whose norm
/// is below zero_tol times the dividend norm counts as zero and ends the run.
EuclidReport euclid_demo(const PolynomialPair& pair, double zero_tol = 1e-12);

struct BenchRow {
  std::string name;
  std::string meta;
  int degree = 0;
  double rho = 0.0;
  double kappa = 0.0;
  double coef_error = 0.0;  // NaN when no true GCD is known
  double ms = 0.0;
  bool pass = true;
  std::string failure;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Suite-level failures (e.g. the Test 5 median bound).
  std::vector<std::string> suite_failures;
  bool ok() const;
};

/// Parses a selection such as "test1:n=6,10,test2,test6:m=2-1-1-0".
/// Each entry naming a suite opens it; bare values extend the last key.
std::vector<BenchCase> select_cases(std::string_view selection, std::uint64_t seed = 1);

BenchRow run_case(const BenchCase& c, const GcdConfig& base);

/// Runs the selected cases on `workers` threads, keeping selection order,
/// writes the CSV report to `out` when non-empty.
BenchReport run_suite(std::string_view selection, const GcdConfig& config,
                      const std::string& out = {}, int workers = 1);

std::string to_csv(const BenchReport& report);
BenchReport parse_csv(std::string_view text);
std::string summary_table(const BenchReport& report);

}  // namespace nugcd::bench

#endif  // NUGCD_BENCH_HPP
