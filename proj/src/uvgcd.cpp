#include "nugcd/uvgcd.hpp"

#include <algorithm>
#include <cmath>

namespace nugcd {

namespace {

GcdResult trivial_result(const PolynomialPair& pair, const DenseVector& weights, Rng& rng) {
  GcdResult out;
  out.triplet.u = Polynomial::constant(1.0);
  out.triplet.v = pair.p;
  out.triplet.w = pair.q;
  out.triplet.rho = 0.0;
  out.triplet.converged = true;
  out.triplet.h = DenseVector::Ones(1);
  const GcdSystem sys(pair, out.triplet.u, weights);
  const DenseMatrix jac =
      weights.asDiagonal() * assemble_jacobian(sys, out.triplet.u, pair.p, pair.q);
  Eigen::HouseholderQR<DenseMatrix> qr(jac);
  const DenseMatrix tri = qr.matrixQR().topRows(jac.cols()).triangularView<Eigen::Upper>();
  out.triplet.kappa = condition_estimate(tri, rng);
  return out;
}

// Largest weighted entry over the p and q rows.
double max_relative(const DenseVector& weighted_residual) {
  return weighted_residual.tail(weighted_residual.size() - 1).cwiseAbs().maxCoeff();
}

}  // namespace

const char* to_string(ToleranceMode mode) {
  switch (mode) {
    case ToleranceMode::absolute:
      return "absolute";
    case ToleranceMode::relative:
      return "relative";
    case ToleranceMode::coefficientwise:
      return "coefficientwise";
  }
  return "unknown";
}

double backward_error(const PolynomialPair& pair, const PolynomialPair& product,
                      ToleranceMode mode) {
  if (mode != ToleranceMode::coefficientwise) return pair_distance(product, pair);
  if (product.m() != pair.m() || product.n() != pair.n()) {
    throw Error("backward_error: degree mismatch");
  }
  DenseVector diff(1 + pair.m() + 1 + pair.n() + 1);
  diff << 0.0, to_vector(product.p) - to_vector(pair.p), to_vector(product.q) - to_vector(pair.q);
  return max_relative(diff.cwiseProduct(coefficient_weights(pair)));
}

GcdResult uvgcd(const PolynomialPair& input, const GcdConfig& config) {
  if (!(config.epsilon > 0.0)) throw Error("uvgcd: epsilon must be positive");

  const double input_norm = input.norm();
  const bool cwise = config.mode == ToleranceMode::coefficientwise;
  const double tol =
      config.mode == ToleranceMode::relative ? config.epsilon * input_norm : config.epsilon;
  const double scale = config.normalize_inputs ? 1.0 / input_norm : 1.0;

  const bool swapped = input.m() < input.n();
  PolynomialPair pair = swapped ? PolynomialPair(input.q, input.p) : input;
  if (scale != 1.0) pair = PolynomialPair(pair.p.scaled(scale), pair.q.scaled(scale));
  // rho and the sweep threshold in working units. The coefficient-wise
  // measure is scale free.
  const double work_tol = cwise ? tol : tol * scale;
  const double sweep_tol = cwise ? tol * input_norm * scale : work_tol;
  const DenseVector weights =
      cwise ? coefficient_weights(pair) : DenseVector::Ones(pair.m() + pair.n() + 3);
  const int m = pair.m();
  const int n = pair.n();

  Rng rng(config.rng_seed);
  GcdResult result;
  bool found = false;

  if (n >= 1) {
    IterationControl sweep_control;
    sweep_control.max_iterations = config.max_iter_steps;
    RefineOptions refine;
    refine.max_steps = config.max_gn_steps;

    SylvesterQr state(pair);
    std::vector<SigmaSample> trace;
    std::vector<int> attempted;
    for (int j = n; j >= 1; --j) {
      const SingularPair sp = smallest_singular(state.r(), rng, sweep_control);
      trace.push_back({j, sp.sigma / scale});
      if (sp.sigma < sweep_tol * std::sqrt(static_cast<double>(m - j + 1))) {
        attempted.push_back(j);
        try {
          auto [v0, w0] = extract_cofactors(sp.y, state.perm(), m, n, j);
          Polynomial u0 = initial_gcd(v0, w0, pair, j);
          // Unit-norm u0 with h = u0 balances the scaling row against the
          // convolution rows; the products u0 v0, u0 w0 are unchanged.
          const double un = norm(u0);
          u0 = u0.scaled(1.0 / un);
          v0 = v0.scaled(un);
          w0 = w0.scaled(un);
          const GcdSystem sys(pair, u0, weights);
          GcdTriplet t = gauss_newton(sys, u0, v0, w0, rng, refine);
          if (cwise) t.rho = max_relative(sys.residual(t.u, t.v, t.w));
          if (t.rho < work_tol) {
            result.triplet = std::move(t);
            result.degree = j;
            result.certified = true;
            found = true;
          }
        } catch (const DegenerateCandidate&) {
          // candidate rejected; keep sweeping
        }
        if (found) break;
      }
      if (j > 1) state.downdate();
    }
    result.sigma_trace = std::move(trace);
    result.attempted = std::move(attempted);
  }

  if (!found) {
    auto trivial = trivial_result(pair, weights, rng);
    trivial.sigma_trace = std::move(result.sigma_trace);
    trivial.attempted = std::move(result.attempted);
    result = std::move(trivial);
  }

  if (scale != 1.0) {
    // Undo the input scaling on the products: u carries no scale, v and w do.
    result.triplet.v = result.triplet.v.scaled(1.0 / scale);
    result.triplet.w = result.triplet.w.scaled(1.0 / scale);
    if (!cwise) result.triplet.rho /= scale;
  }
  if (!found) {
    result.triplet.v = pair.p.scaled(1.0 / scale);
    result.triplet.w = pair.q.scaled(1.0 / scale);
  }
  if (swapped) std::swap(result.triplet.v, result.triplet.w);
  result.swapped = swapped;
  result.mode = config.mode;
  result.tolerance = tol;
  result.input_scale = scale;
  return result;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

VerifyReport verify_result(const PolynomialPair& pair, const GcdResult& result) {
  VerifyReport report;
  const auto& t = result.triplet;
  const bool shapes = t.u.degree() == result.degree &&
                      t.v.degree() == pair.m() - result.degree &&
                      t.w.degree() == pair.n() - result.degree;
  report.checks.push_back({"degrees", shapes, static_cast<double>(result.degree), 0.0});
  if (!shapes) return report;

  const PolynomialPair product(multiply(t.u, t.v), multiply(t.u, t.w));
  const bool cwise = result.mode == ToleranceMode::coefficientwise;
  report.backward_error = backward_error(pair, product, result.mode);
  const double slack = cwise ? 1e-12 : 1e-14 * pair.norm();

  if (result.certified) {
    report.checks.push_back({"backward_error_below_tolerance",
                             report.backward_error < result.tolerance,
                             report.backward_error, result.tolerance});
  } else {
    const bool trivial = result.degree == 0 && t.u.size() == 1 && t.u[0] == Complex(1.0);
    report.checks.push_back({"trivial_triplet", trivial, static_cast<double>(result.degree), 0.0});
  }
  report.checks.push_back({"backward_error_within_rho", report.backward_error <= t.rho + slack,
                           report.backward_error, t.rho + slack});
  if (t.h.size() == static_cast<Eigen::Index>(t.u.size())) {
    const double scaling = std::abs(t.h.dot(to_vector(t.u)) - t.beta);
    // The scaling row lives in the (possibly normalized) working units.
    const double bound = (cwise ? 0.0 : t.rho * result.input_scale) + 1e-12;
    report.checks.push_back({"scaling_row_within_rho", scaling <= bound, scaling, bound});
  }
  report.checks.push_back({"kappa_positive", t.kappa > 0.0, t.kappa, 0.0});
  return report;
}

}  // namespace nugcd
