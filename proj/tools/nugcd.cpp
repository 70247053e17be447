// nugcd: numerical GCD of inexact univariate polynomials.
//
//   nugcd gcd --p <file|expr> --q <file|expr> --eps <float>
//             [--relative | --coefficientwise]
//             [--seed <int>] [--verify] [--json]
//   nugcd bench --suite test1,test2,... [--out report.csv] [--workers N]
//   nugcd euclid-demo --p ... --q ...
//
// Exit codes: 0 success, 1 usage error, 2 regression failure, 3 numeric failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "nugcd/bench.hpp"
#include "nugcd/text.hpp"
#include "nugcd/uvgcd.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kRegression = 2;
constexpr int kNumeric = 3;

nugcd::Polynomial load(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return nugcd::parse_polynomial(line);
    }
    throw nugcd::Error("no polynomial found in file '" + arg + "'");
  }
  return nugcd::parse_polynomial(arg);
}

nlohmann::json coeff_json(const nugcd::Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

nlohmann::json result_json(const nugcd::GcdResult& r) {
  nlohmann::json j;
  j["degree"] = r.degree;
  j["certified"] = r.certified;
  j["rho"] = r.triplet.rho;
  j["kappa"] = std::isfinite(r.triplet.kappa) ? nlohmann::json(r.triplet.kappa) : nlohmann::json(nullptr);
  j["u"] = coeff_json(r.triplet.u);
  j["v"] = coeff_json(r.triplet.v);
  j["w"] = coeff_json(r.triplet.w);
  auto trace = nlohmann::json::array();
  for (const auto& s : r.sigma_trace) trace.push_back({s.j, s.sigma});
  j["sigma_trace"] = trace;
  j["swapped"] = r.swapped;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical GCD of univariate polynomials with inexact coefficients"};
  app.require_subcommand(1);

  std::string p_arg, q_arg;
  double eps = 0.0;
  bool relative = false, cwise = false, verify = false, json = false;
  std::uint64_t seed = 42;
  auto* gcd = app.add_subcommand("gcd", "Compute the numerical GCD of two polynomials");
  gcd->add_option("--p", p_arg, "First polynomial (file or expression)")->required();
  gcd->add_option("--q", q_arg, "Second polynomial (file or expression)")->required();
  gcd->add_option("--eps", eps, "Backward-error tolerance")->required();
  auto* rel = gcd->add_flag("--relative", relative, "Tolerance relative to |(p, q)|");
  gcd->add_flag("--coefficientwise", cwise, "Tolerance on coefficient-wise relative error")
      ->excludes(rel);
  gcd->add_option("--seed", seed, "Seed of the start vectors");
  gcd->add_flag("--verify", verify, "Recompute and check the backward error");
  gcd->add_flag("--json", json, "Emit JSON");

  std::string suite, out;
  int workers = 1;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Run benchmark suites");
  bench->add_option("--suite", suite, "Selection, e.g. test1:n=6,10,test2")->required();
  bench->add_option("--out", out, "CSV report path");
  bench->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Seed for randomized generators");

  std::string ep_arg, eq_arg;
  auto* euclid = app.add_subcommand("euclid-demo", "Naive floating-point Euclidean remainders");
  euclid->add_option("--p", ep_arg, "Dividend (file or expression)")->required();
  euclid->add_option("--q", eq_arg, "Divisor (file or expression)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (gcd->parsed()) {
      const nugcd::PolynomialPair pair(load(p_arg), load(q_arg));
      nugcd::GcdConfig config;
      config.epsilon = eps;
      config.mode = cwise      ? nugcd::ToleranceMode::coefficientwise
                    : relative ? nugcd::ToleranceMode::relative
                               : nugcd::ToleranceMode::absolute;
      config.rng_seed = seed;
      const auto result = nugcd::uvgcd(pair, config);
      nugcd::VerifyReport report;
      if (verify) report = nugcd::verify_result(pair, result);
      if (json) {
        auto j = result_json(result);
        if (verify) {
          j["verify"] = {{"ok", report.ok()}, {"backward_error", report.backward_error}};
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "degree    " << result.degree << (result.certified ? " (certified)" : " (trivial)")
                  << "\nrho       " << nugcd::format_double(result.triplet.rho)
                  << "\nkappa     " << nugcd::format_double(result.triplet.kappa)
                  << "\nu         " << nugcd::format_coefficients(result.triplet.u)
                  << "\nmonic u   " << nugcd::format_coefficients(nugcd::monic(result.triplet.u))
                  << "\nv         " << nugcd::format_coefficients(result.triplet.v)
                  << "\nw         " << nugcd::format_coefficients(result.triplet.w) << '\n';
        if (verify) {
          for (const auto& c : report.checks) {
            std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name << "  " << c.value << '\n';
          }
        }
      }
      return verify && !report.ok() ? kNumeric : 0;
    }
    if (bench->parsed()) {
      nugcd::GcdConfig config;
      config.rng_seed = bench_seed;
      const auto report = nugcd::bench::run_suite(suite, config, out, workers);
      std::cout << nugcd::bench::summary_table(report);
      return report.ok() ? 0 : kRegression;
    }
    if (euclid->parsed()) {
      nugcd::PolynomialPair pair(load(ep_arg), load(eq_arg));
      if (pair.m() < pair.n()) pair = nugcd::PolynomialPair(pair.q, pair.p);
      const auto report = nugcd::bench::euclid_demo(pair);
      for (std::size_t i = 0; i < report.steps.size(); ++i) {
        const auto& s = report.steps[i];
        std::cout << "step " << i + 1 << "  remainder degree "
                  << (s.remainder_degree == nugcd::Polynomial::kZeroDegree ? std::string("-inf")
                                                                           : std::to_string(s.remainder_degree))
                  << "  norm " << nugcd::format_double(s.remainder_norm) << '\n';
      }
      std::cout << "gcd (unnormalized) " << nugcd::format_coefficients(report.last_nonzero) << '\n';
      return 0;
    }
  } catch (const nugcd::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}
