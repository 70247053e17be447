#include "nugcd/refine.hpp"

#include <cmath>
#include <limits>

namespace nugcd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

DenseVector stack(const Polynomial& u, const Polynomial& v, const Polynomial& w) {
  DenseVector x(static_cast<Eigen::Index>(u.size() + v.size() + w.size()));
  x << to_vector(u), to_vector(v), to_vector(w);
  return x;
}

void check_degrees(const GcdSystem& sys, const Polynomial& u, const Polynomial& v,
                   const Polynomial& w) {
  if (u.degree() != sys.k() || v.degree() != sys.m() - sys.k() ||
      w.degree() != sys.n() - sys.k()) {
    throw Error("gcd system: triplet degrees do not match (k, m-k, n-k)");
  }
}

Eigen::HouseholderQR<DenseMatrix> checked_qr(const DenseMatrix& a, double rel_floor,
                                             const char* what) {
  Eigen::HouseholderQR<DenseMatrix> qr(a);
  // Each pivot against its own column, so that badly scaled but independent
  // columns are not mistaken for dependent ones.
  const auto diag = qr.matrixQR().diagonal().cwiseAbs();
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (!(diag[i] >= rel_floor * a.col(i).norm()) || diag[i] == 0.0) {
      throw DegenerateCandidate(std::string(what) + ": numerically rank-deficient");
    }
  }
  return qr;
}

}  // namespace

GcdSystem::GcdSystem(PolynomialPair pair, const Polynomial& u0, DenseVector weights)
    : GcdSystem(std::move(pair), to_vector(u0) / to_vector(u0).squaredNorm(), Complex(1.0),
                std::move(weights)) {}

GcdSystem::GcdSystem(PolynomialPair pair, DenseVector h, Complex beta, DenseVector weights)
    : pair_(std::move(pair)), h_(std::move(h)), beta_(beta), weights_(std::move(weights)) {
  if (h_.size() < 1 || k() > pair_.n() || k() > pair_.m()) {
    throw Error("gcd system: scaling vector length must be k+1 with k <= min(m, n)");
  }
  target_.resize(1 + pair_.m() + 1 + pair_.n() + 1);
  target_ << beta_, to_vector(pair_.p), to_vector(pair_.q);
  if (weights_.size() == 0) weights_ = DenseVector::Ones(target_.size());
  if (weights_.size() != target_.size()) throw Error("gcd system: one weight per row expected");
}

DenseVector coefficient_weights(const PolynomialPair& pair) {
  DenseVector wt(1 + pair.m() + 1 + pair.n() + 1);
  wt[0] = 1.0;
  Eigen::Index row = 1;
  for (const Polynomial* f : {&pair.p, &pair.q}) {
    const DenseVector c = to_vector(*f);
    const double floor = c.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const double a = std::abs(c[i]);
      wt[row++] = 1.0 / (a > 0.0 ? a : floor);
    }
  }
  return wt;
}

DenseVector GcdSystem::residual(const Polynomial& u, const Polynomial& v,
                                const Polynomial& w) const {
  return (evaluate(u, v, w) - target_).cwiseProduct(weights_);
}

DenseVector GcdSystem::evaluate(const Polynomial& u, const Polynomial& v,
                                const Polynomial& w) const {
  check_degrees(*this, u, v, w);
  DenseVector f(target_.size());
  f << h_.dot(to_vector(u)), to_vector(multiply(u, v)), to_vector(multiply(u, w));
  return f;
}

Polynomial initial_gcd(const Polynomial& v0, const Polynomial& w0, const PolynomialPair& pair,
                       int k) {
  if (k < 0 || v0.degree() != pair.m() - k || w0.degree() != pair.n() - k) {
    throw Error("initial_gcd: cofactor degrees do not match (m-k, n-k)");
  }
  DenseMatrix a(pair.m() + 1 + pair.n() + 1, k + 1);
  a << conv_matrix(v0, k), conv_matrix(w0, k);
  DenseVector b(a.rows());
  b << to_vector(pair.p), to_vector(pair.q);
  const auto qr = checked_qr(a, 1e-14, "initial_gcd");
  return to_structural(qr.solve(b));
}

DenseMatrix assemble_jacobian(const GcdSystem& sys, const Polynomial& u, const Polynomial& v,
                              const Polynomial& w) {
  check_degrees(sys, u, v, w);
  const int k = sys.k();
  const int m = sys.m();
  const int n = sys.n();
  DenseMatrix j = DenseMatrix::Zero(1 + (m + 1) + (n + 1), (k + 1) + (m - k + 1) + (n - k + 1));
  j.block(0, 0, 1, k + 1) = sys.h().adjoint();
  j.block(1, 0, m + 1, k + 1) = conv_matrix(v, k);
  j.block(1, k + 1, m + 1, m - k + 1) = conv_matrix(u, m - k);
  j.block(m + 2, 0, n + 1, k + 1) = conv_matrix(w, k);
  j.block(m + 2, m + 2, n + 1, n - k + 1) = conv_matrix(u, n - k);
  return j;
}

GcdTriplet gauss_newton(const GcdSystem& sys, const Polynomial& u0, const Polynomial& v0,
                        const Polynomial& w0, Rng& rng, const RefineOptions& options) {
  check_degrees(sys, u0, v0, w0);
  const auto ku = static_cast<Eigen::Index>(u0.size());
  const auto kv = static_cast<Eigen::Index>(v0.size());
  const auto kw = static_cast<Eigen::Index>(w0.size());
  auto split = [&](const DenseVector& x) {
    return std::tuple{to_structural(x.head(ku)), to_structural(x.segment(ku, kv)),
                      to_structural(x.tail(kw))};
  };

  GcdTriplet out;
  DenseVector x = stack(u0, v0, w0);
  auto [u, v, w] = split(x);
  double delta = sys.residual(u, v, w).norm();
  out.residuals.push_back(delta);
  DenseVector best = x;
  double best_delta = delta;

  // Below this the residual is rounding noise and further steps only dither.
  const double floor = 16.0 * kEps * sys.target().cwiseProduct(sys.weights()).norm();
  int steps = 0;
  int growth = 0;
  bool converged = false;
  while (steps < options.max_steps) {
    const DenseMatrix jac = sys.weights().asDiagonal() * assemble_jacobian(sys, u, v, w);
    const DenseVector f = sys.residual(u, v, w);
    const auto qr = checked_qr(jac, 1e-14, "gauss_newton");
    x -= qr.solve(f);
    ++steps;
    std::tie(u, v, w) = split(x);
    const double next = sys.residual(u, v, w).norm();
    out.residuals.push_back(next);
    if (next < best_delta) {
      best = x;
      best_delta = next;
    }
    if (!std::isfinite(next)) break;
    if (next <= floor || std::abs(next - delta) <= options.min_decrease * delta) {
      converged = true;
      break;
    }
    growth = next > delta ? growth + 1 : 0;
    if (growth >= options.max_growth) break;
    delta = next;
  }

  std::tie(out.u, out.v, out.w) = split(best);
  out.rho = best_delta;
  out.gn_steps = steps;
  out.converged = converged;
  out.h = sys.h();
  out.beta = sys.beta();

  const DenseMatrix jac = sys.weights().asDiagonal() * assemble_jacobian(sys, out.u, out.v, out.w);
  Eigen::HouseholderQR<DenseMatrix> qr(jac);
  const DenseMatrix tri =
      qr.matrixQR().topRows(jac.cols()).triangularView<Eigen::Upper>();
  out.kappa = condition_estimate(tri, rng, options.condition_control);
  return out;
}

double condition_estimate(const DenseMatrix& exit_triangle, Rng& rng,
                          const IterationControl& control) {
  const SingularPair pair = smallest_singular(exit_triangle, rng, control);
  const double rnorm = exit_triangle.triangularView<Eigen::Upper>().toDenseMatrix().norm();
  if (!(pair.sigma >= kEps * rnorm) || pair.sigma == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 1.0 / pair.sigma;
}

}  // namespace nugcd
