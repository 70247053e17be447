#ifndef NUGCD_POLYNOMIAL_HPP
#define NUGCD_POLYNOMIAL_HPP

#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace nugcd {

using Complex = std::complex<double>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over the complex numbers.
///
/// Coefficients are stored in ascending power order, c_0 first. The zero
/// polynomial is the empty sequence. The degree of a nonzero polynomial is
/// exactly the declared length minus one: the checked constructors reject an
/// exactly-zero leading coefficient instead of trimming it, since the
/// Sylvester dimensions downstream depend on the declared degrees.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs)
      : Polynomial(std::vector<Complex>(coeffs)) {}

  static Polynomial from_real(std::span<const double> coeffs);
  static Polynomial from_real(std::initializer_list<double> coeffs) {
    return from_real(std::span<const double>(coeffs.begin(), coeffs.size()));
  }

  /// Builds a polynomial of structural degree coeffs.size()-1 without checking
  /// the leading coefficient. Used for iterates and cofactor estimates whose
  /// degree is fixed by the problem dimensions rather than by their values.
  static Polynomial structural(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c) { return Polynomial({c}); }

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  Complex leading() const { return coeffs_.back(); }

  Polynomial scaled(Complex s) const;
  /// Formal derivative.
  Polynomial derivative() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Two nonzero polynomials; m and n are their declared degrees.
struct PolynomialPair {
  PolynomialPair(Polynomial p_in, Polynomial q_in);

  Polynomial p;
  Polynomial q;

  int m() const { return p.degree(); }
  int n() const { return q.degree(); }
  /// sqrt(|p|^2 + |q|^2)
  double norm() const;
};

Polynomial multiply(const Polynomial& a, const Polynomial& b);
double norm(const Polynomial& p);
/// a - b, zero-padding the shorter sequence. The result keeps the longer
/// length (it is a coefficient difference, not a reduced polynomial).
std::vector<Complex> difference(const Polynomial& a, const Polynomial& b);
double pair_distance(const PolynomialPair& a, const PolynomialPair& b);
Complex evaluate(const Polynomial& p, Complex x);

/// p scaled so that its leading coefficient is one.
Polynomial monic(const Polynomial& p);

}  // namespace nugcd

#endif  // NUGCD_POLYNOMIAL_HPP
