#include "nugcd/singular.hpp"

#include <cmath>
#include <limits>

namespace nugcd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

SingularPair smallest_singular(const DenseMatrix& r, Rng& rng, const IterationControl& control) {
  if (r.rows() != r.cols() || r.rows() == 0) {
    throw Error("smallest_singular: triangle must be square and nonempty");
  }
  const Eigen::Index size = r.rows();
  const double rnorm = r.triangularView<Eigen::Upper>().toDenseMatrix().norm();

  SingularPair out;
  if (rnorm == 0.0) {
    out.y = DenseVector::Zero(size);
    out.y(0) = 1.0;
    out.converged = true;
    out.gap_ratio = std::numeric_limits<double>::quiet_NaN();
    return out;
  }

  DenseMatrix tri = r.triangularView<Eigen::Upper>();
  const double floor = kEps * rnorm;
  for (Eigen::Index i = 0; i < size; ++i) {
    const Complex d = tri(i, i);
    if (std::abs(d) < floor) {
      tri(i, i) = (d == Complex(0.0)) ? Complex(floor) : floor * d / std::abs(d);
    }
  }
  const auto upper = tri.triangularView<Eigen::Upper>();

  std::normal_distribution<double> normal;
  DenseVector z(size);
  for (Eigen::Index i = 0; i < size; ++i) z(i) = normal(rng);
  z.normalize();

  auto estimate = [&](const DenseVector& v) {
    return (r.triangularView<Eigen::Upper>() * v).norm();
  };

  double sigma = estimate(z);
  double prev_step = std::numeric_limits<double>::quiet_NaN();
  double contraction = std::numeric_limits<double>::quiet_NaN();
  int it = 0;
  bool converged = false;
  while (it < control.max_iterations) {
    DenseVector next = upper.adjoint().solve(z);
    upper.solveInPlace(next);
    const double nn = next.norm();
    if (!std::isfinite(nn) || nn == 0.0) break;
    next /= nn;
    ++it;

    const double step = (next - z).norm();
    if (std::isfinite(prev_step) && prev_step > 0.0) contraction = step / prev_step;
    prev_step = step;

    const double next_sigma = estimate(next);
    const double change = std::abs(next_sigma - sigma);
    z = std::move(next);
    sigma = next_sigma;
    if (change <= control.rel_tol * sigma + control.abs_tol * rnorm) {
      converged = true;
      break;
    }
  }

  out.sigma = sigma;
  out.y = std::move(z);
  out.iterations = it;
  out.converged = converged;
  out.gap_ratio = std::isfinite(contraction) ? std::sqrt(contraction)
                                             : std::numeric_limits<double>::quiet_NaN();
  return out;
}

std::pair<Polynomial, Polynomial> extract_cofactors(const DenseVector& y,
                                                    const std::vector<int>& perm, int m,
                                                    int n, int j) {
  const int w_len = n - j + 1;
  const int v_len = m - j + 1;
  if (static_cast<int>(perm.size()) != w_len + v_len || y.size() != w_len + v_len) {
    throw Error("extract_cofactors: dimensions do not match S_j");
  }
  DenseVector logical(y.size());
  for (std::size_t c = 0; c < perm.size(); ++c) {
    logical(perm[c]) = y(static_cast<Eigen::Index>(c));
  }
  Polynomial w0 = to_structural(logical.head(w_len));
  Polynomial v0 = to_structural(-logical.tail(v_len));
  return {std::move(v0), std::move(w0)};
}

}  // namespace nugcd
