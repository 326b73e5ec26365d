#include "spohn/game.hpp"

#include <algorithm>
#include <sstream>

#include "spohn/error.hpp"
#include "spohn/spohn_geometry.hpp"

namespace spohn {

PayoffTables PayoffTables::parse_bimatrix(std::string_view text) {
  PayoffTables X;
  std::vector<std::string> rows;
  std::string current;
  for (char ch : text) {
    if (ch == ';') {
      rows.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  rows.push_back(current);
  if (rows.size() != 2) throw ParseError("bimatrix needs exactly two rows separated by ';'");
  for (std::size_t i = 0; i < 2; ++i) {
    std::istringstream in(rows[i]);
    std::vector<std::string> cells;
    for (std::string cell; in >> cell;) cells.push_back(cell);
    if (cells.size() != 2) throw ParseError("bimatrix row " + std::to_string(i + 1) + " needs exactly two 'a,b' cells");
    for (std::size_t j = 0; j < 2; ++j) {
      const auto comma = cells[j].find(',');
      if (comma == std::string::npos) throw ParseError("bimatrix cell '" + cells[j] + "' is not of the form a,b");
      X.A[i][j] = Rational::parse(cells[j].substr(0, comma));
      X.B[i][j] = Rational::parse(cells[j].substr(comma + 1));
    }
  }
  return X;
}

JointDistribution JointDistribution::make(const Rational& p11, const Rational& p12, const Rational& p21,
                                          const Rational& p22) {
  JointDistribution d{{p11, p12, p21, p22}};
  for (const auto& x : d.p) {
    if (x.sign() < 0) throw DomainError("joint distribution has a negative entry");
  }
  if (p11 + p12 + p21 + p22 != Rational(1)) throw DomainError("joint distribution does not sum to 1");
  return d;
}

bool JointDistribution::totally_mixed() const {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.sign() > 0; });
}

JointDistribution MixedProfile::segre() const {
  const Rational one(1);
  return JointDistribution::make(q * r, q * (one - r), (one - q) * r, (one - q) * (one - r));
}

ConditionalPayoffs partial_conditional_payoffs(const PayoffTables& X, const JointDistribution& d) {
  const auto& A = X.A;
  const auto& B = X.B;
  const auto& p = d.p;
  ConditionalPayoffs out;
  if (!d.row1().is_zero()) out.values[0] = (A[0][0] * p[0] + A[0][1] * p[1]) / d.row1();
  if (!d.row2().is_zero()) out.values[1] = (A[1][0] * p[2] + A[1][1] * p[3]) / d.row2();
  if (!d.col1().is_zero()) out.values[2] = (B[0][0] * p[0] + B[1][0] * p[2]) / d.col1();
  if (!d.col2().is_zero()) out.values[3] = (B[0][1] * p[1] + B[1][1] * p[3]) / d.col2();
  return out;
}

std::array<Rational, 4> conditional_expected_payoffs(const PayoffTables& X, const JointDistribution& p) {
  static const char* const names[] = {"E1^(1): marginal p1+", "E2^(1): marginal p2+", "E1^(2): marginal p+1",
                                      "E2^(2): marginal p+2"};
  const auto partial = partial_conditional_payoffs(X, p);
  std::array<Rational, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!partial.values[k]) throw DomainError(std::string("conditional payoff undefined, ") + names[k] + " is zero");
    out[k] = *partial.values[k];
  }
  return out;
}

std::pair<Rational, Rational> expected_payoffs(const PayoffTables& X, const std::array<Rational, 4>& p) {
  Rational pi1, pi2;
  for (std::size_t k = 0; k < 4; ++k) {
    pi1 += X.A[k / 2][k % 2] * p[k];
    pi2 += X.B[k / 2][k % 2] * p[k];
  }
  return {pi1, pi2};
}

TotallyMixedNash totally_mixed_nash(const PayoffTables& X) {
  const auto& A = X.A;
  const auto& B = X.B;
  const Rational dq = B[0][0] - B[0][1] - B[1][0] + B[1][1];
  const Rational dr = A[0][0] - A[0][1] - A[1][0] + A[1][1];
  if (dq.is_zero() || dr.is_zero()) return {TotallyMixedNash::Status::Degenerate, std::nullopt};
  const Rational q = (B[1][1] - B[1][0]) / dq;
  const Rational r = (A[1][1] - A[0][1]) / dr;
  auto inside = [](const Rational& v) { return v.sign() > 0 && v < Rational(1); };
  if (!inside(q) || !inside(r)) return {TotallyMixedNash::Status::None, std::nullopt};
  return {TotallyMixedNash::Status::Found, MixedProfile{q, r}};
}

std::vector<std::pair<int, int>> pure_nash(const PayoffTables& X) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (X.A[i][j] >= X.A[1 - i][j] && X.B[i][j] >= X.B[i][1 - j]) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

bool is_nash(const PayoffTables& X, const MixedProfile& s) {
  const Rational one(1);
  if (s.q.sign() < 0 || s.q > one || s.r.sign() < 0 || s.r > one) return false;
  // payoff of each pure strategy against the opponent's mix
  const Rational row1 = X.A[0][0] * s.r + X.A[0][1] * (one - s.r);
  const Rational row2 = X.A[1][0] * s.r + X.A[1][1] * (one - s.r);
  const Rational col1 = X.B[0][0] * s.q + X.B[1][0] * (one - s.q);
  const Rational col2 = X.B[0][1] * s.q + X.B[1][1] * (one - s.q);
  const bool p1 = (s.q.is_zero() || row1 >= row2) && (s.q == one || row2 >= row1);
  const bool p2 = (s.r.is_zero() || col1 >= col2) && (s.r == one || col2 >= col1);
  return p1 && p2;
}

KonstanzMatrix konstanz_matrix(const PayoffTables& X, const Rational& pi1, const Rational& pi2) {
  const auto& A = X.A;
  const auto& B = X.B;
  const Rational zero;
  KonstanzMatrix k{pi1, pi2, {}, {}};
  k.entries = {
      {pi1 - A[0][0], pi1 - A[0][1], zero, zero},
      {zero, zero, pi1 - A[1][0], pi1 - A[1][1]},
      {pi2 - B[0][0], zero, pi2 - B[1][0], zero},
      {zero, pi2 - B[0][1], zero, pi2 - B[1][1]},
  };
  k.determinant = determinant(k.entries);
  return k;
}

DeStatus de_membership(const PayoffTables& X, const JointDistribution& p) {
  if (p.row1().is_zero() || p.row2().is_zero() || p.col1().is_zero() || p.col2().is_zero()) {
    return DeStatus::BoundaryUndecided;
  }
  const auto q = build_quadrics(X);
  const bool on = q.q1.evaluate(p.p).is_zero() && q.q2.evaluate(p.p).is_zero();
  return on ? DeStatus::DE : DeStatus::NotDE;
}

std::string to_string(DeStatus s) {
  switch (s) {
    case DeStatus::DE:
      return "DE";
    case DeStatus::NotDE:
      return "notDE";
    case DeStatus::BoundaryUndecided:
      return "boundary-undecided";
  }
  return "unknown";
}

}  // namespace spohn
