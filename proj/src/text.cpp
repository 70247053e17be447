#include "nugcd/text.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace nugcd {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  /// Unsigned decimal literal.
  double number() {
    skip_space();
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) fail("expected a number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      const std::size_t exp_start = pos_;
      digits();
      if (pos_ == exp_start) pos_ = save;
    }
    double value = 0.0;
    std::string literal(text_.substr(start, pos_ - start));
    // from_chars rejects a trailing '.', which "10." uses.
    if (!literal.empty() && literal.back() == '.') literal.push_back('0');
    if (literal.front() == '.') literal.insert(literal.begin(), '0');
    const auto res = std::from_chars(literal.data(), literal.data() + literal.size(), value);
    if (res.ec != std::errc() || res.ptr != literal.data() + literal.size()) {
      throw ParseError("malformed number", start);
    }
    return value;
  }

  /// Unsigned scalar term: number, number 'i', or bare 'i'.
  Complex scalar_term() {
    if (accept('i')) return {0.0, 1.0};
    const double value = number();
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return {0.0, value};
    }
    return {value, 0.0};
  }

  /// Signed sum of scalar terms, e.g. "3-4i" or "-2.5e-3".
  Complex complex_sum() {
    Complex total(0.0);
    bool first = true;
    while (true) {
      double sign = 1.0;
      if (accept('+')) {
      } else if (accept('-')) {
        sign = -1.0;
      } else if (!first) {
        break;
      }
      total += sign * scalar_term();
      first = false;
      const char c = peek();
      if (c != '+' && c != '-') break;
    }
    return total;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Polynomial parse_coefficient_list(std::string_view text) {
  std::vector<Complex> coeffs;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    try {
      coeffs.push_back(parse_complex(text.substr(i, j - i)));
    } catch (const ParseError& e) {
      throw ParseError("bad coefficient '" + std::string(text.substr(i, j - i)) + "'",
                       i + e.position());
    }
    i = j;
  }
  if (coeffs.empty()) throw ParseError("empty coefficient list", 0);
  if (coeffs.back() == Complex(0.0)) {
    throw ParseError("leading coefficient is zero", text.find_last_not_of(" \t\r\n"));
  }
  return Polynomial(std::move(coeffs));
}

Polynomial parse_expression(std::string_view text) {
  Scanner s(text);
  std::map<int, Complex> terms;
  bool first = true;
  while (!s.done()) {
    double sign = 1.0;
    if (s.accept('+')) {
    } else if (s.accept('-')) {
      sign = -1.0;
    } else if (!first) {
      s.fail("expected '+' or '-'");
    }
    first = false;

    Complex coef(1.0);
    bool have_coef = false;
    if (s.accept('(')) {
      coef = s.complex_sum();
      s.expect(')');
      have_coef = true;
    } else if (s.at_number() || s.peek() == 'i') {
      coef = s.scalar_term();
      have_coef = true;
    }
    int power = 0;
    bool have_x = false;
    if (have_coef) s.accept('*');
    if (s.accept('x')) {
      have_x = true;
      power = 1;
      if (s.accept('^')) {
        if (!s.at_number()) s.fail("expected an integer exponent");
        const std::size_t at = s.pos();
        const double e = s.number();
        if (e != static_cast<double>(static_cast<int>(e)) || e < 0 || e > 1e6) {
          throw ParseError("exponent must be a nonnegative integer", at);
        }
        power = static_cast<int>(e);
      }
      if (s.accept('*')) {
        if (!(s.at_number() || s.peek() == '(' || s.peek() == 'i')) s.fail("expected a coefficient");
        if (s.accept('(')) {
          coef *= s.complex_sum();
          s.expect(')');
        } else {
          coef *= s.scalar_term();
        }
      }
    }
    if (!have_coef && !have_x) s.fail("expected a term");
    terms[power] += sign * coef;
  }
  if (terms.empty()) throw ParseError("empty expression", 0);
  std::vector<Complex> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1, Complex(0.0));
  for (const auto& [power, c] : terms) coeffs[static_cast<std::size_t>(power)] = c;
  while (!coeffs.empty() && coeffs.back() == Complex(0.0)) coeffs.pop_back();
  return Polynomial(std::move(coeffs));
}

}  // namespace

Complex parse_complex(std::string_view text) {
  Scanner s(text);
  if (s.done()) throw ParseError("empty scalar", 0);
  const Complex c = s.complex_sum();
  if (!s.done()) s.fail("unexpected character");
  return c;
}

Polynomial parse_polynomial(std::string_view text) {
  if (text.find_first_of("x(") != std::string_view::npos) return parse_expression(text);
  return parse_coefficient_list(text);
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  std::string out = c.real() == 0.0 ? std::string() : format_double(c.real());
  std::string im = format_double(c.imag());
  if (!out.empty() && im.front() != '-') out += '+';
  return out + im + 'i';
}

std::string format_coefficients(const Polynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += format_complex(p[i]);
  }
  return out.empty() ? "0" : out;
}

std::string format_expression(const Polynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == Complex(0.0)) continue;
    if (!out.empty()) out += '+';
    out += '(' + format_complex(p[i]) + ')';
    if (i >= 1) out += "*x";
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace nugcd
