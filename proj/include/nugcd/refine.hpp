#ifndef NUGCD_REFINE_HPP
#define NUGCD_REFINE_HPP

#include <vector>

#include "nugcd/singular.hpp"

namespace nugcd {

/// A candidate GCD degree whose linear subproblem is numerically singular.
class DegenerateCandidate : public Error {
 public:
  using Error::Error;
};

/// The regularized GCD system f_h(u, v, w) = [beta; p; q] for degree k, where
/// f_h(u, v, w) = [h^H u; coeffs(u v); coeffs(u w)].
///
/// Optional row weights (one per entry of the target) turn the least-squares
/// residual into |W (f_h - target)|. Empty weights mean W = I.
class GcdSystem {
 public:
  /// h = u0 / |u0|^2 and beta = 1, so that h^H u0 = beta.
  GcdSystem(PolynomialPair pair, const Polynomial& u0, DenseVector weights = {});
  GcdSystem(PolynomialPair pair, DenseVector h, Complex beta, DenseVector weights = {});

  const PolynomialPair& pair() const { return pair_; }
  int k() const { return static_cast<int>(h_.size()) - 1; }
  int m() const { return pair_.m(); }
  int n() const { return pair_.n(); }
  const DenseVector& h() const { return h_; }
  Complex beta() const { return beta_; }
  /// [beta; p; q]
  const DenseVector& target() const { return target_; }

  const DenseVector& weights() const { return weights_; }

  DenseVector evaluate(const Polynomial& u, const Polynomial& v, const Polynomial& w) const;
  /// W (f_h(u, v, w) - target)
  DenseVector residual(const Polynomial& u, const Polynomial& v, const Polynomial& w) const;

 private:
  PolynomialPair pair_;
  DenseVector h_;
  Complex beta_;
  DenseVector target_;
  DenseVector weights_;
};

/// Row weights [1; 1/|p_i|; 1/|q_i|] measuring each coefficient relative to
/// itself. A zero coefficient is measured against the largest coefficient of
/// its polynomial.
DenseVector coefficient_weights(const PolynomialPair& pair);

struct GcdTriplet {
  Polynomial u;
  Polynomial v;
  Polynomial w;
  /// |W (f_h(u, v, w) - [beta; p; q])| at the returned iterate.
  double rho = 0.0;
  /// 1 / sigma_min(J_h) at the returned iterate; +infinity when singular.
  double kappa = 0.0;
  int gn_steps = 0;
  bool converged = false;
  /// Scaling row h^H u = beta the iterates were held to.
  DenseVector h;
  Complex beta{1.0};
  /// Residual of every iterate formed, the initial one first.
  std::vector<double> residuals;
};

struct RefineOptions {
  int max_steps = 50;
  /// Stop (converged) once a step changes the residual by less than this
  /// fraction of it, or the residual reaches rounding level.
  double min_decrease = 1e-3;
  /// Stop (not converged) after this many consecutive residual increases.
  int max_growth = 5;
  IterationControl condition_control{20, 1e-3, 1e-15};
};

/// Least-squares u0 of [C_k(v0); C_k(w0)] u = [p; q] via Householder QR.
/// Throws DegenerateCandidate when the stacked matrix is numerically singular.
Polynomial initial_gcd(const Polynomial& v0, const Polynomial& w0, const PolynomialPair& pair,
                       int k);

/// J_h = [h^H 0 0; C_k(v) C_{m-k}(u) 0; C_k(w) 0 C_{n-k}(u)].
DenseMatrix assemble_jacobian(const GcdSystem& sys, const Polynomial& u, const Polynomial& v,
                              const Polynomial& w);

/// Gauss-Newton on W f_h(u, v, w) = W [beta; p; q]. Each step solves the
/// linearized least-squares problem by Householder QR of W J_h. Stops when the
/// residual levels off or keeps growing, and returns the iterate with the
/// smallest residual.
GcdTriplet gauss_newton(const GcdSystem& sys, const Polynomial& u0, const Polynomial& v0,
                        const Polynomial& w0, Rng& rng, const RefineOptions& options = {});

/// 1 / sigma_min of an upper triangle, from a few inverse-iteration steps.
/// Returns +infinity when sigma_min falls below eps * |R|.
double condition_estimate(const DenseMatrix& exit_triangle, Rng& rng,
                          const IterationControl& control = {20, 1e-3, 1e-15});

}  // namespace nugcd

#endif  // NUGCD_REFINE_HPP
