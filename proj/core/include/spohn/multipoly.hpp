#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spohn/rational.hpp"

namespace spohn {

class ProjPoint;

using Exponents = std::vector<int>;

/// Sparse polynomial over Q in an ordered list of named variables.
///
/// Terms are kept in a map from exponent vectors to nonzero coefficients, so
/// two polynomials over the same variables compare equal exactly when they are
/// the same polynomial. Binary operations require identical variable lists.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, const Rational& value);
  static MultiPoly variable(std::vector<std::string> vars, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, const Rational& coef);

  /// Parses sums of monomials such as "-x*z + 2xt - 3/2 y^2". Variable names
  /// are matched greedily against `vars`, so juxtaposition ("p11p22") works.
  static MultiPoly parse(std::string_view text, std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  std::size_t var_index(std::string_view name) const;
  Rational coefficient(const Exponents& exps) const;

  void add_term(const Exponents& exps, const Rational& coef);

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  MultiPoly derivative(std::size_t var) const;

  /// Substitutes every variable by the corresponding image; the images share
  /// a (possibly different) variable list which becomes the result's.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;

  /// Same polynomial with variables renamed positionally.
  MultiPoly renamed(std::vector<std::string> vars) const;

  /// Homogeneous part of the given degree in the selected variable.
  MultiPoly coefficient_of(std::size_t var, int power) const;

  std::string str() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;
  MultiPoly pow(int exponent) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_vars(const MultiPoly& o, const char* op) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op);

/// Replaces `var` by `replacement` (degree <= 1, over the same variables).
MultiPoly substitute_linear(const MultiPoly& p, std::string_view var, const MultiPoly& replacement);

/// Exact quotient p / line for a homogeneous linear form; throws DomainError
/// when the division leaves a remainder.
MultiPoly divide_by_linear(const MultiPoly& p, const MultiPoly& line);

/// Coefficients of p(s*p1 + t*p2) ordered s^d, s^(d-1) t, ..., t^d.
struct BinaryForm {
  std::vector<Rational> coefficients;
  bool is_zero() const;
};

BinaryForm restrict_to_line(const MultiPoly& p, const ProjPoint& p1, const ProjPoint& p2);

std::vector<Rational> gradient(const MultiPoly& p, const ProjPoint& at);

/// True when p and q differ by a nonzero rational factor.
bool proportional(const MultiPoly& p, const MultiPoly& q);

/// Homogeneous linear form a*v0 + b*v1 + ... from its coefficient vector.
MultiPoly linear_form(std::vector<std::string> vars, std::span<const Rational> coefficients);

/// Coefficient vector of a homogeneous linear form.
std::vector<Rational> linear_coefficients(const MultiPoly& line);

}  // namespace spohn
