#include "nugcd/sylvester.hpp"

#include <algorithm>
#include <string>

namespace nugcd {

DenseVector to_vector(const Polynomial& p) {
  DenseVector v(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) v(static_cast<Eigen::Index>(i)) = p[i];
  return v;
}

Polynomial to_structural(const Eigen::Ref<const DenseVector>& v) {
  return Polynomial::structural(std::vector<Complex>(v.data(), v.data() + v.size()));
}

DenseMatrix conv_matrix(const Polynomial& f, int m) {
  if (f.is_zero()) throw Error("conv_matrix: zero polynomial");
  if (m < 0) throw Error("conv_matrix: negative column degree");
  const int d = f.degree();
  DenseMatrix c = DenseMatrix::Zero(d + m + 1, m + 1);
  for (int col = 0; col <= m; ++col) {
    for (int i = 0; i <= d; ++i) c(col + i, col) = f[static_cast<std::size_t>(i)];
  }
  return c;
}

DenseMatrix sylvester(const PolynomialPair& pair, int j) {
  const int m = pair.m();
  const int n = pair.n();
  if (j < 1 || j > std::min(m, n)) {
    throw Error("sylvester: index " + std::to_string(j) + " outside [1, " +
                std::to_string(std::min(m, n)) + "]");
  }
  DenseMatrix s(m + n - j + 1, (n - j + 1) + (m - j + 1));
  s << conv_matrix(pair.p, n - j), conv_matrix(pair.q, m - j);
  return s;
}

SylvesterQr::SylvesterQr(PolynomialPair pair) : pair_(std::move(pair)), j_(pair_.n()) {
  if (n() < 1) throw Error("SylvesterQr: degree of q must be at least 1");
  if (m() < n()) throw Error("SylvesterQr: pair must satisfy deg p >= deg q");
  r_ = sylvester(pair_, j_);
  q_ = DenseMatrix::Identity(r_.rows(), r_.rows());
  perm_.resize(static_cast<std::size_t>(r_.cols()));
  for (std::size_t c = 0; c < perm_.size(); ++c) perm_[c] = static_cast<int>(c);
  for (int c = 0; c < cols(); ++c) eliminate_below(c, c);
}

DenseMatrix SylvesterQr::r() const {
  DenseMatrix out = r_.topRows(cols()).triangularView<Eigen::Upper>();
  return out;
}

void SylvesterQr::eliminate_below(int row0, int col) {
  const Eigen::Index len = r_.rows() - row0;
  if (len <= 1) return;
  auto x = r_.col(col).segment(row0, len);
  const double xnorm = x.norm();
  if (xnorm == 0.0) return;
  const double tail = x.tail(len - 1).norm();
  if (tail == 0.0) return;
  const Complex x0 = x(0);
  const Complex phase = (x0 == Complex(0.0)) ? Complex(1.0) : x0 / std::abs(x0);
  const Complex alpha = -phase * xnorm;
  DenseVector v = x;
  v(0) -= alpha;
  const double vnorm2 = v.squaredNorm();
  const double tau = 2.0 / vnorm2;

  // R <- H R on the trailing columns, Q <- Q H.
  const Eigen::Index ncols = r_.cols() - col;
  auto block = r_.block(row0, col, len, ncols);
  Eigen::RowVectorXcd w = v.adjoint() * block;
  block.noalias() -= (tau * v) * w;
  r_.col(col).segment(row0 + 1, len - 1).setZero();
  r_(row0, col) = alpha;

  auto qblock = q_.rightCols(len);
  DenseVector qv = qblock * v;
  qblock.noalias() -= (tau * qv) * v.adjoint();
}

void SylvesterQr::downdate() {
  if (j_ <= 1) throw Error("SylvesterQr::downdate: already at j = 1");
  const int m = this->m();
  const int n = this->n();
  const int old_rows = rows();
  const int old_cols = cols();
  const int new_rows = old_rows + 1;
  const int p_block = n - j_ + 1;  // columns of C_{n-j}(p)

  // Zero row appended to S_j: Q grows by an identity entry, R by a zero row.
  DenseMatrix q_new = DenseMatrix::Zero(new_rows, new_rows);
  q_new.topLeftCorner(old_rows, old_rows) = q_;
  q_new(old_rows, old_rows) = Complex(1.0);
  q_.swap(q_new);

  DenseMatrix inserted = DenseMatrix::Zero(new_rows, 2);
  inserted.col(0).segment(p_block, m + 1) = to_vector(pair_.p);
  inserted.col(1).segment(m - j_ + 1, n + 1) = to_vector(pair_.q);

  DenseMatrix r_new = DenseMatrix::Zero(new_rows, old_cols + 2);
  r_new.topLeftCorner(old_rows, old_cols) = r_;
  r_new.rightCols(2).noalias() = q_.adjoint() * inserted;
  r_.swap(r_new);

  // Logical layout of S_{j-1}: the p block gains a column at its end, which
  // shifts every q-block index by one.
  for (auto& c : perm_) {
    if (c >= p_block) ++c;
  }
  perm_.push_back(p_block);
  perm_.push_back(old_cols + 1);
  --j_;

  eliminate_below(old_cols, old_cols);
  eliminate_below(old_cols + 1, old_cols + 1);
}

DenseMatrix SylvesterQr::permuted_sylvester() const {
  const DenseMatrix s = sylvester(pair_, j_);
  DenseMatrix out(s.rows(), s.cols());
  for (int c = 0; c < cols(); ++c) out.col(c) = s.col(perm_[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace nugcd
