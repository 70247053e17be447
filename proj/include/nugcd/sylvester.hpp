#ifndef NUGCD_SYLVESTER_HPP
#define NUGCD_SYLVESTER_HPP

#include <Eigen/Dense>
#include <vector>

#include "nugcd/polynomial.hpp"

namespace nugcd {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

DenseVector to_vector(const Polynomial& p);
Polynomial to_structural(const Eigen::Ref<const DenseVector>& v);

/// Convolution matrix C_m(f): the (deg f + m + 1) x (m + 1) matrix with
/// C_m(f) * coeffs(g) = coeffs(f * g) for every g of degree <= m.
DenseMatrix conv_matrix(const Polynomial& f, int m);

/// j-th Sylvester matrix [C_{n-j}(p) | C_{m-j}(q)], 1 <= j <= min(m, n).
DenseMatrix sylvester(const PolynomialPair& pair, int j);

/// Column-permuted QR factorization of S_j(p, q), carried from j = n down to
/// j = 1 by appending the two new Sylvester columns at the right.
///
/// perm()[c] is the logical column of S_j stored in physical column c, so
/// S_j * P_j has columns S_j(:, perm()[0]), S_j(:, perm()[1]), ...
/// Requires m >= n >= 1; the driver orients the pair.
class SylvesterQr {
 public:
  explicit SylvesterQr(PolynomialPair pair);

  int j() const { return j_; }
  int m() const { return pair_.m(); }
  int n() const { return pair_.n(); }
  int rows() const { return static_cast<int>(r_.rows()); }
  int cols() const { return static_cast<int>(perm_.size()); }
  const PolynomialPair& pair() const { return pair_; }

  /// Square upper triangle of S_j * P_j (the full factor cropped to cols rows).
  DenseMatrix r() const;
  const std::vector<int>& perm() const { return perm_; }

  /// Advance from S_j to S_{j-1}. Throws when j == 1.
  void downdate();

  /// S_j(p, q) * P_j built from scratch.
  DenseMatrix permuted_sylvester() const;

 private:
  /// Householder reflector zeroing r_(row0+1:, col); applied to the trailing
  /// columns of r_ and accumulated into q_.
  void eliminate_below(int row0, int col);

  PolynomialPair pair_;
  int j_;
  // Q is kept whole: appending columns needs Q^H times the new columns.
  DenseMatrix q_;
  DenseMatrix r_;  // rows x cols, upper trapezoidal
  std::vector<int> perm_;
};

}  // namespace nugcd

#endif  // NUGCD_SYLVESTER_HPP
