#ifndef NUGCD_TEXT_HPP
#define NUGCD_TEXT_HPP

#include <string>
#include <string_view>

#include "nugcd/polynomial.hpp"

namespace nugcd {

/// Malformed polynomial text. position() is the 0-based offset of the error.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses either the coefficient-list form ("10 1" is x + 10, ascending
/// powers, complex entries written a+bi) or the expression form
/// ("x^2+3*x+2", "(1+2i)*x^2-3"). Text containing 'x' or '(' is an expression.
Polynomial parse_polynomial(std::string_view text);

/// A single complex scalar such as "2", "-1.5e-3", "3-4i", "i".
Complex parse_complex(std::string_view text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);
std::string format_complex(Complex c);

/// Ascending coefficient list, space separated.
std::string format_coefficients(const Polynomial& p);
/// Expression form, e.g. "(10)+(1)*x".
std::string format_expression(const Polynomial& p);

}  // namespace nugcd

#endif  // NUGCD_TEXT_HPP
