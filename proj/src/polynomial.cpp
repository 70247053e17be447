#include "nugcd/polynomial.hpp"

#include <cmath>

namespace nugcd {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) {
    throw Error("polynomial: leading coefficient is exactly zero");
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error("polynomial: non-finite coefficient");
    }
  }
}

Polynomial Polynomial::from_real(std::span<const double> coeffs) {
  return Polynomial(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

Polynomial Polynomial::structural(std::vector<Complex> coeffs) {
  Polynomial p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

Polynomial Polynomial::scaled(Complex s) const {
  std::vector<Complex> out(coeffs_);
  for (auto& c : out) c *= s;
  return structural(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = static_cast<double>(i) * coeffs_[i];
  }
  return Polynomial(std::move(out));
}

PolynomialPair::PolynomialPair(Polynomial p_in, Polynomial q_in)
    : p(std::move(p_in)), q(std::move(q_in)) {
  if (p.is_zero() || q.is_zero()) {
    throw Error("polynomial pair: both members must be nonzero");
  }
}

double PolynomialPair::norm() const { return std::hypot(nugcd::norm(p), nugcd::norm(q)); }

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial::structural(std::move(out));
}

double norm(const Polynomial& p) {
  // Scaled accumulation so that huge or tiny coefficients do not overflow.
  double scale = 0.0;
  double ssq = 1.0;
  for (const auto& c : p.coeffs()) {
    for (double x : {c.real(), c.imag()}) {
      if (x == 0.0) continue;
      const double ax = std::abs(x);
      if (scale < ax) {
        ssq = 1.0 + ssq * (scale / ax) * (scale / ax);
        scale = ax;
      } else {
        ssq += (ax / scale) * (ax / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

std::vector<Complex> difference(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> out(std::max(a.size(), b.size()), Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

double pair_distance(const PolynomialPair& a, const PolynomialPair& b) {
  const auto dp = Polynomial::structural(difference(a.p, b.p));
  const auto dq = Polynomial::structural(difference(a.q, b.q));
  return std::hypot(norm(dp), norm(dq));
}

Complex evaluate(const Polynomial& p, Complex x) {
  Complex acc(0.0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) throw Error("monic: zero polynomial");
  return p.scaled(1.0 / p.leading());
}

}  // namespace nugcd
