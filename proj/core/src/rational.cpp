#include "spohn/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "spohn/error.hpp"

namespace spohn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return BigInt(buf, 10);
}

BigInt pow10(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert non-finite double to a rational");
  return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(s.substr(0, slash), text);
    const BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  // Decimal with optional fraction part and exponent.
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    const BigInt exp_value = parse_integer(exp_part.empty() ? std::string_view("x") : exp_part, text);
    if (!exp_value.fits_slong_p() || exp_value > 100000 || exp_value < -100000) {
      throw ParseError("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw ParseError("not a rational number: '" + std::string(text) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  std::string digits(int_part);
  digits += frac_part;
  BigInt mantissa(digits.empty() ? std::string("0") : digits, 10);
  if (negative) mantissa = -mantissa;
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) return Rational(mantissa * pow10(static_cast<unsigned long>(exponent)), BigInt(1));
  return Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base = *this;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::optional<Rational> Rational::exact_root(unsigned k) const {
  if (k == 0) return std::nullopt;
  if (k == 1 || is_zero()) return *this;
  if (sign() < 0 && k % 2 == 0) return std::nullopt;
  BigInt num = value_.get_num();
  if (num < 0) num = -num;
  BigInt den = value_.get_den();
  BigInt rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
  if (sign() < 0) rn = -rn;
  return Rational(rn, rd);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

}  // namespace spohn
