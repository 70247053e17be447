#include "nugcd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "nugcd/text.hpp"

namespace nugcd::bench {

namespace {

Polynomial product(const std::vector<Polynomial>& factors) {
  Polynomial acc = Polynomial::constant(1.0);
  for (const auto& f : factors) acc = multiply(acc, f);
  return acc;
}

Polynomial linear(double root) { return Polynomial::from_real({-root, 1.0}); }

Polynomial test3_v() { return Polynomial::from_real({1, 1, 1, 1}); }
Polynomial test3_w() { return Polynomial::from_real({1, -1, 1, -1, 1}); }

std::string fmt(double x) { return format_double(x); }

}  // namespace

BenchCase gen_test1(int n) {
  if (n < 4 || n % 2 != 0) throw Error("gen_test1: n must be even and at least 4");
  const int k = n / 2;
  const double r1 = 0.5;
  const double r2 = 1.5;
  // (x - r a)^2 + r^2 b^2 with a = cos(j pi / n), b = sin(j pi / n)
  auto quad = [n](double r, int j) {
    const double a = std::cos(j * std::numbers::pi / n);
    const double b = std::sin(j * std::numbers::pi / n);
    return Polynomial::from_real({r * r * (a * a + b * b), -2.0 * r * a, 1.0});
  };
  std::vector<Polynomial> uf, vf, wf;
  for (int j = 1; j <= k; ++j) {
    uf.push_back(quad(r1, j));
    vf.push_back(quad(r2, j));
  }
  for (int j = k + 1; j <= n; ++j) wf.push_back(quad(r1, j));
  const Polynomial u = product(uf);
  BenchCase c{"test1:n=" + std::to_string(n),
              PolynomialPair(multiply(u, product(vf)), multiply(u, product(wf))),
              u,
              1e-10,
              ToleranceMode::relative,
              {{"n", std::to_string(n)}},
              {}};
  c.expect.degree = u.degree();
  if (n <= 6) {
    c.expect.max_error = 1e-13;
  } else if (n <= 10) {
    c.expect.max_error = 1e-10;
  } else if (n <= 16) {
    c.expect.max_error = 1e-7;
  }
  return c;
}

std::vector<BenchCase> gen_test2() {
  std::vector<Polynomial> pf, qf;
  for (int j = 1; j <= 10; ++j) {
    const double xj = (j % 2 == 0 ? 1.0 : -1.0) * (j / 2.0);
    pf.push_back(linear(xj));
    qf.push_back(linear(xj - std::pow(10.0, -j)));
  }
  const PolynomialPair pair(product(pf), product(qf));
  struct Rung {
    double eps;
    int degree;
    double nearness;  // reference nearness for this tolerance
  };
  const Rung ladder[] = {{1e-2, 9, 0.56e-2}, {1e-3, 8, 0.26e-3}, {1e-4, 7, 0.14e-4},
                         {1e-5, 6, 0.11e-5}, {1e-6, 5, 0.41e-7}, {1e-8, 4, 0.42e-8},
                         {1e-9, 3, 0.14e-9}, {1e-10, 2, 0.24e-10}};
  std::vector<BenchCase> out;
  for (const auto& r : ladder) {
    BenchCase c{"test2:eps=" + fmt(r.eps), pair, std::nullopt, r.eps,
                ToleranceMode::coefficientwise,
                {{"eps", fmt(r.eps)}}, {}};
    c.expect.degree = r.degree;
    c.expect.min_rho = r.nearness / 10.0;
    c.expect.max_rho = r.nearness * 10.0;
    out.push_back(std::move(c));
  }
  return out;
}

BenchCase gen_test3(int n, std::uint64_t seed) {
  if (n < 1) throw Error("gen_test3: n must be positive");
  Rng rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Complex> uc(static_cast<std::size_t>(n) + 1);
  for (auto& c : uc) c = coef(rng);
  while (uc.back() == Complex(0.0)) uc.back() = coef(rng);
  const Polynomial u(std::move(uc));
  BenchCase c{"test3:n=" + std::to_string(n),
              PolynomialPair(multiply(u, test3_v()), multiply(u, test3_w())),
              u,
              1e-10,
              ToleranceMode::relative,
              {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}},
              {}};
  c.expect.degree = n;
  c.expect.max_error = n <= 200 ? 1e-12 : 1e-11;
  if (n <= 200) c.expect.max_ms = 30000.0;
  return c;
}

BenchCase gen_test5(std::uint64_t seed, bool zero_exponents) {
  Rng rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> expo(0, 6);
  std::vector<Complex> uc(16);
  for (auto& c : uc) {
    const int cj = coef(rng);
    const int ej = expo(rng);
    c = cj * std::pow(10.0, zero_exponents ? 0 : ej);
  }
  while (uc.back() == Complex(0.0)) {
    const int cj = coef(rng);
    const int ej = expo(rng);
    uc.back() = cj * std::pow(10.0, zero_exponents ? 0 : ej);
  }
  const Polynomial u(std::move(uc));
  BenchCase c{"test5:seed=" + std::to_string(seed),
              PolynomialPair(multiply(u, test3_v()), multiply(u, test3_w())),
              u,
              1e-10,
              ToleranceMode::relative,
              {{"seed", std::to_string(seed)}, {"digits_target", "11"}},
              {}};
  c.expect.degree = 15;
  return c;
}

BenchCase gen_test6(std::array<int, 4> mult) {
  int total = 0;
  for (int mi : mult) {
    if (mi < 0) throw Error("gen_test6: multiplicities must be nonnegative");
    total += mi;
  }
  if (total == 0) throw Error("gen_test6: at least one multiplicity must be positive");
  std::vector<Polynomial> pf, gf;
  for (int r = 0; r < 4; ++r) {
    for (int e = 0; e < mult[static_cast<std::size_t>(r)]; ++e) pf.push_back(linear(r + 1.0));
    for (int e = 1; e < mult[static_cast<std::size_t>(r)]; ++e) gf.push_back(linear(r + 1.0));
  }
  const Polynomial p = product(pf);
  std::string tag;
  for (int mi : mult) tag += (tag.empty() ? "" : "-") + std::to_string(mi);
  BenchCase c{"test6:m=" + tag, PolynomialPair(p, p.derivative()), product(gf), 1e-10,
              ToleranceMode::coefficientwise,
              {{"m", tag}}, {}};
  c.expect.degree = c.true_gcd->degree();
  const bool high = mult[0] > 5 || total > 11;
  c.expect.max_error = high ? 1e-9 : 1e-11;
  return c;
}

double coefficient_error(const Polynomial& computed, const Polynomial& truth) {
  if (computed.degree() != truth.degree()) return std::numeric_limits<double>::infinity();
  const Polynomial a = monic(computed);
  const Polynomial b = monic(truth);
  const double floor = 1e-3 * norm(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double diff = std::abs(a[i] - b[i]);
    const double mag = std::abs(b[i]);
    worst = std::max(worst, mag > floor ? diff / mag : diff / std::max(1.0, floor));
  }
  return worst;
}

EuclidReport euclid_demo(const PolynomialPair& pair, double zero_tol) {
  if (pair.m() < pair.n()) throw Error("euclid_demo: requires deg p >= deg q");
  EuclidReport report;
  std::vector<Complex> a(pair.p.coeffs().begin(), pair.p.coeffs().end());
  std::vector<Complex> b(pair.q.coeffs().begin(), pair.q.coeffs().end());
  report.last_nonzero = pair.q;
  while (!b.empty()) {
    // Long division of a by b; the remainder is what is left of a.
    const double a_norm = norm(Polynomial::structural(a));
    for (std::size_t top = a.size(); top >= b.size(); --top) {
      const Complex qcoef = a[top - 1] / b.back();
      const std::size_t shift = top - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= qcoef * b[i];
      a[top - 1] = 0.0;
      if (top == b.size()) break;
    }
    a.resize(b.size() - 1);
    while (!a.empty() && a.back() == Complex(0.0)) a.pop_back();
    const double r_norm = norm(Polynomial::structural(a));
    if (r_norm <= zero_tol * a_norm) a.clear();
    report.steps.push_back(
        {a.empty() ? Polynomial::kZeroDegree : static_cast<int>(a.size()) - 1, r_norm});
    if (!a.empty()) report.last_nonzero = Polynomial::structural(a);
    std::swap(a, b);
  }
  return report;
}

bool BenchReport::ok() const {
  return suite_failures.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.pass; });
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(sep, start), s.size());
    out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int to_int(const std::string& s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error("bench selection: expected an integer, got '" + s + "'");
  }
  return v;
}

struct SuiteSpec {
  std::string name;
  std::map<std::string, std::vector<std::string>> params;
};

std::vector<std::string> param(const SuiteSpec& s, const std::string& key,
                               std::vector<std::string> fallback) {
  const auto it = s.params.find(key);
  return it == s.params.end() ? fallback : it->second;
}

}  // namespace

std::vector<BenchCase> select_cases(std::string_view selection, std::uint64_t seed) {
  std::vector<SuiteSpec> suites;
  std::string last_key;
  std::string trimmed(selection);
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                               [](unsigned char ch) { return std::isspace(ch); }),
                trimmed.end());
  if (trimmed.empty()) return {};
  for (const auto& item : split(trimmed, ',')) {
    if (item.empty()) continue;
    if (item.rfind("test", 0) == 0) {
      const std::size_t colon = item.find(':');
      suites.push_back({item.substr(0, colon), {}});
      last_key.clear();
      if (colon == std::string::npos) continue;
      const std::string rest = item.substr(colon + 1);
      const std::size_t eq = rest.find('=');
      if (eq == std::string::npos) throw Error("bench selection: expected key=value in '" + item + "'");
      last_key = rest.substr(0, eq);
      suites.back().params[last_key].push_back(rest.substr(eq + 1));
    } else if (suites.empty()) {
      throw Error("bench selection: '" + item + "' does not follow a suite name");
    } else if (const std::size_t eq = item.find('='); eq != std::string::npos) {
      last_key = item.substr(0, eq);
      suites.back().params[last_key].push_back(item.substr(eq + 1));
    } else if (!last_key.empty()) {
      suites.back().params[last_key].push_back(item);
    } else {
      throw Error("bench selection: stray value '" + item + "'");
    }
  }

  std::vector<BenchCase> cases;
  for (const auto& s : suites) {
    if (s.name == "test1") {
      for (const auto& n : param(s, "n", {"6", "10", "16"})) cases.push_back(gen_test1(to_int(n)));
    } else if (s.name == "test2") {
      for (auto& c : gen_test2()) cases.push_back(std::move(c));
    } else if (s.name == "test3") {
      const auto seeds = param(s, "seed", {std::to_string(seed)});
      for (const auto& n : param(s, "n", {"50", "100", "200"})) {
        cases.push_back(gen_test3(to_int(n), static_cast<std::uint64_t>(to_int(seeds.front()))));
      }
    } else if (s.name == "test5") {
      const int count = to_int(param(s, "count", {"100"}).front());
      const int first = to_int(param(s, "seed", {std::to_string(seed)}).front());
      for (int i = 0; i < count; ++i) cases.push_back(gen_test5(static_cast<std::uint64_t>(first + i)));
    } else if (s.name == "test6") {
      for (const auto& m : param(s, "m", {"2-1-1-0", "3-2-1-0", "4-3-2-1", "5-3-2-1", "9-6-4-2"})) {
        const auto parts = split(m, '-');
        if (parts.size() != 4) throw Error("bench selection: test6 needs m=a-b-c-d");
        cases.push_back(gen_test6({to_int(parts[0]), to_int(parts[1]), to_int(parts[2]),
                                   to_int(parts[3])}));
      }
    } else {
      throw Error("bench selection: unknown suite '" + s.name + "'");
    }
  }
  return cases;
}

BenchRow run_case(const BenchCase& c, const GcdConfig& base) {
  GcdConfig config = base;
  config.epsilon = c.epsilon;
  config.mode = c.mode;

  BenchRow row;
  row.name = c.name;
  for (const auto& [k, v] : c.metadata) row.meta += (row.meta.empty() ? "" : ";") + k + "=" + v;
  row.meta += (row.meta.empty() ? "" : ";") + std::string("eps=") + fmt(c.epsilon) +
              ";" + to_string(c.mode);

  const auto start = std::chrono::steady_clock::now();
  const GcdResult result = uvgcd(c.pair, config);
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  row.degree = result.degree;
  row.rho = result.triplet.rho;
  row.kappa = result.triplet.kappa;
  row.coef_error = c.true_gcd ? coefficient_error(result.triplet.u, *c.true_gcd)
                              : std::numeric_limits<double>::quiet_NaN();

  std::vector<std::string> failures;
  const auto& e = c.expect;
  if (e.degree && result.degree != *e.degree) {
    failures.push_back("degree " + std::to_string(result.degree) + " != " + std::to_string(*e.degree));
  }
  if (e.degree && *e.degree > 0 && !result.certified) failures.push_back("not certified");
  if (e.max_error && !(row.coef_error <= *e.max_error)) {
    failures.push_back("error " + fmt(row.coef_error) + " > " + fmt(*e.max_error));
  }
  if (e.min_rho && !(row.rho >= *e.min_rho)) failures.push_back("rho " + fmt(row.rho) + " < " + fmt(*e.min_rho));
  if (e.max_rho && !(row.rho <= *e.max_rho)) failures.push_back("rho " + fmt(row.rho) + " > " + fmt(*e.max_rho));
  if (e.max_ms && !(row.ms <= *e.max_ms)) failures.push_back("time " + fmt(row.ms) + "ms > " + fmt(*e.max_ms));
  row.pass = failures.empty();
  for (const auto& f : failures) row.failure += (row.failure.empty() ? "" : "; ") + f;
  return row;
}

BenchReport run_suite(std::string_view selection, const GcdConfig& config, const std::string& out,
                      int workers) {
  const std::vector<BenchCase> cases = select_cases(selection, config.rng_seed);
  BenchReport report;
  report.rows.resize(cases.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      report.rows[i] = run_case(cases[i], config);
    }
  };
  const int nthreads = std::max(1, std::min<int>(workers, static_cast<int>(cases.size())));
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
  }

  // Test 5 is judged on the median error over its instances.
  std::vector<double> test5;
  for (const auto& r : report.rows) {
    if (r.name.rfind("test5", 0) == 0) test5.push_back(r.coef_error);
  }
  if (!test5.empty()) {
    std::sort(test5.begin(), test5.end());
    const std::size_t h = test5.size() / 2;
    const double median = test5.size() % 2 ? test5[h] : 0.5 * (test5[h - 1] + test5[h]);
    if (!(median <= 1e-9)) {
      report.suite_failures.push_back("test5 median error " + fmt(median) + " > 1e-9");
    }
  }

  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error("run_suite: cannot open '" + out + "' for writing");
    f << to_csv(report);
    if (!f) throw Error("run_suite: write to '" + out + "' failed");
  }
  return report;
}

std::string to_csv(const BenchReport& report) {
  std::string out = "case,name-metadata,degree,rho,kappa,coef_error,ms\n";
  for (const auto& r : report.rows) {
    out += r.name + ',' + r.meta + ',' + std::to_string(r.degree) + ',' + fmt(r.rho) + ',' +
           fmt(r.kappa) + ',' + fmt(r.coef_error) + ',' + fmt(r.ms) + '\n';
  }
  return out;
}

BenchReport parse_csv(std::string_view text) {
  BenchReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "case,name-metadata,degree,rho,kappa,coef_error,ms") {
    throw Error("parse_csv: missing or unexpected header");
  }
  auto num = [](const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw Error("parse_csv: bad number '" + s + "'");
    }
    return v;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw Error("parse_csv: expected 7 fields in '" + line + "'");
    BenchRow r;
    r.name = f[0];
    r.meta = f[1];
    r.degree = to_int(f[2]);
    r.rho = num(f[3]);
    r.kappa = num(f[4]);
    r.coef_error = num(f[5]);
    r.ms = num(f[6]);
    report.rows.push_back(std::move(r));
  }
  return report;
}

std::string summary_table(const BenchReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "case" << std::right << std::setw(7) << "degree"
     << std::setw(12) << "rho" << std::setw(12) << "kappa" << std::setw(12) << "error"
     << std::setw(10) << "ms" << "  status\n";
  os << std::scientific << std::setprecision(2);
  for (const auto& r : report.rows) {
    os << std::left << std::setw(22) << r.name << std::right << std::setw(7) << r.degree
       << std::setw(12) << r.rho << std::setw(12) << r.kappa << std::setw(12) << r.coef_error
       << std::fixed << std::setprecision(1) << std::setw(10) << r.ms << std::scientific
       << std::setprecision(2) << "  " << (r.pass ? "ok" : "FAIL: " + r.failure) << '\n';
  }
  for (const auto& f : report.suite_failures) os << "FAIL: " << f << '\n';
  return os.str();
}

}  // namespace nugcd::bench
