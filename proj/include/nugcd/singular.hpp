#ifndef NUGCD_SINGULAR_HPP
#define NUGCD_SINGULAR_HPP

#include <random>
#include <utility>
#include <vector>

#include "nugcd/sylvester.hpp"

namespace nugcd {

using Rng = std::mt19937_64;

/// Smallest singular value estimate of a triangle and its right singular vector.
struct SingularPair {
  double sigma = 0.0;
  DenseVector y;        // unit vector, coordinates of the triangle's columns
  int iterations = 0;
  bool converged = false;
  /// Estimate of sigma_min / sigma_second from the contraction of successive
  /// iterates; NaN when fewer than three iterates were formed.
  double gap_ratio = 0.0;
};

/// Stopping rule for the alternating triangular solves: stop once
/// |sigma_k - sigma_{k-1}| <= rel_tol * sigma_k + abs_tol * |R|_F.
struct IterationControl {
  int max_iterations = 200;
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
};

/// Inverse iteration on R^H R: solve R^H y = z forward, R z = y backward,
/// normalize, repeat. Diagonal entries smaller than eps * |R|_F are lifted to
/// that floor (keeping their phase) during the solves.
SingularPair smallest_singular(const DenseMatrix& r, Rng& rng,
                               const IterationControl& control = {});

/// Splits a singular vector y = P [w0; -v0] of S_j into (v0, w0), with
/// deg v0 = m - j and deg w0 = n - j structurally.
std::pair<Polynomial, Polynomial> extract_cofactors(const DenseVector& y,
                                                    const std::vector<int>& perm,
                                                    int m, int n, int j);

}  // namespace nugcd

#endif  // NUGCD_SINGULAR_HPP
