#ifndef NUGCD_UVGCD_HPP
#define NUGCD_UVGCD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nugcd/refine.hpp"

namespace nugcd {

/// How the backward error |(p, q) - (u v, u w)| is measured against epsilon.
enum class ToleranceMode {
  /// 2-norm of the coefficient differences.
  absolute,
  /// 2-norm, compared with epsilon * |(p, q)|.
  relative,
  /// Largest coefficient-wise relative difference, max_i |dc_i| / |c_i|.
  /// Refinement minimizes the weighted 2-norm, and the sweep threshold is
  /// taken relative to |(p, q)|.
  coefficientwise,
};

const char* to_string(ToleranceMode mode);

struct GcdConfig {
  double epsilon = 1e-10;
  ToleranceMode mode = ToleranceMode::absolute;
  std::uint64_t rng_seed = 42;
  int max_gn_steps = 50;
  int max_iter_steps = 200;
  /// Scale (p, q) to unit norm before the sweep; results are scaled back.
  bool normalize_inputs = false;
};

struct SigmaSample {
  int j = 0;
  double sigma = 0.0;
};

struct GcdResult {
  GcdTriplet triplet;
  int degree = 0;
  bool certified = false;
  std::vector<SigmaSample> sigma_trace;
  /// Sylvester indices at which refinement was attempted, in sweep order.
  std::vector<int> attempted;
  /// p and q were exchanged internally to get deg p >= deg q. The returned
  /// v and w always refer to the caller's p and q.
  bool swapped = false;
  ToleranceMode mode = ToleranceMode::absolute;
  /// Tolerance rho was compared with, in the units of the mode.
  double tolerance = 0.0;
  /// Factor applied to (p, q) before the sweep (1 unless normalize_inputs).
  double input_scale = 1.0;
};

/// Numerical GCD of (p, q) within the configured tolerance.
///
/// Sweeps j = n, n-1, ..., 1 over the Sylvester matrices, and whenever
/// sigma_min(S_j) < tol * sqrt(m - j + 1) refines a degree-j candidate by
/// Gauss-Newton. The first candidate with residual below tol is returned;
/// otherwise the trivial triplet (1, p, q) with degree 0.
GcdResult uvgcd(const PolynomialPair& pair, const GcdConfig& config = {});

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double bound = 0.0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  /// |(u v, u w) - (p, q)| recomputed from scratch in the result's mode.
  double backward_error = 0.0;
  bool ok() const;
};

/// Backward error of (u v, u w) against (p, q) as measured by `mode`.
double backward_error(const PolynomialPair& pair, const PolynomialPair& product,
                      ToleranceMode mode);

/// Recomputes the backward error of a result and checks its invariants.
VerifyReport verify_result(const PolynomialPair& pair, const GcdResult& result);

}  // namespace nugcd

#endif  // NUGCD_UVGCD_HPP
