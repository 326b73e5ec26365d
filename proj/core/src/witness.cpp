#include <algorithm>
#include <cmath>

#include "spohn/error.hpp"
#include "spohn/game.hpp"
#include "spohn/spohn_geometry.hpp"

namespace spohn {

Rational EpsSeries::at(const Rational& r) const {
  const Rational eps = r.inverse();
  Rational out;
  Rational power(1);
  for (const auto& coef : c) {
    out += coef * power;
    power *= eps;
  }
  return out;
}

std::string EpsSeries::str() const {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    const bool negative = c[k].sign() < 0;
    const Rational mag = c[k].abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
    out += "/r";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

const std::array<long, 4> kLadder{1000, 10000, 100000, 1000000};

std::array<Rational, 4> evaluate_sequence(const WitnessSequence& seq, const Rational& r) {
  return {seq[0].at(r), seq[1].at(r), seq[2].at(r), seq[3].at(r)};
}

bool all_positive(const WitnessSequence& seq, const Rational& r) {
  const auto p = evaluate_sequence(seq, r);
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.sign() > 0; });
}

int positivity_threshold(const WitnessSequence& seq) {
  for (int n = 2; n <= 1000000; ++n) {
    if (all_positive(seq, Rational(n))) return n;
  }
  throw DomainError("witness sequence is not eventually positive");
}

EpsSeries eps(long c0, long c1 = 0, long c2 = 0, long c3 = 0) { return EpsSeries{{c0, c1, c2, c3}}; }

enum class Relabel { RowSwap, ColSwap, Transpose };

std::array<int, 4> relabel_perm(Relabel op) {
  switch (op) {
    case Relabel::RowSwap:
      return {2, 3, 0, 1};
    case Relabel::ColSwap:
      return {1, 0, 3, 2};
    case Relabel::Transpose:
      return {0, 2, 1, 3};
  }
  return {0, 1, 2, 3};
}

PayoffTables relabel(const PayoffTables& X, Relabel op) {
  PayoffTables Y = X;
  switch (op) {
    case Relabel::RowSwap:
      std::swap(Y.A[0], Y.A[1]);
      std::swap(Y.B[0], Y.B[1]);
      break;
    case Relabel::ColSwap:
      for (int i = 0; i < 2; ++i) {
        std::swap(Y.A[i][0], Y.A[i][1]);
        std::swap(Y.B[i][0], Y.B[i][1]);
      }
      break;
    case Relabel::Transpose:
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          Y.A[i][j] = X.B[j][i];
          Y.B[i][j] = X.A[j][i];
        }
      }
      break;
  }
  return Y;
}

}  // namespace

LimitReport evaluate_witness(const PayoffTables& X, const WitnessSequence& seq, double tolerance) {
  LimitReport report;
  for (long r : kLadder) {
    LadderStep step;
    step.r = Rational(r);
    step.p = evaluate_sequence(seq, step.r);
    step.payoffs = conditional_expected_payoffs(X, JointDistribution{step.p});
    report.ladder.push_back(std::move(step));
  }
  const auto& hi = report.ladder[3].payoffs;
  const auto& lo = report.ladder[2].payoffs;
  for (std::size_t k = 0; k < 4; ++k) {
    report.limits[k] = ((Rational(10) * hi[k] - lo[k]) / Rational(9)).to_double();
  }
  report.marginal_limits = {seq[0].c[0] + seq[1].c[0], seq[2].c[0] + seq[3].c[0], seq[0].c[0] + seq[2].c[0],
                            seq[1].c[0] + seq[3].c[0]};
  static const char* const names[] = {"E1^(1)", "E2^(1)", "E1^(2)", "E2^(2)"};
  for (std::size_t player = 0; player < 2; ++player) {
    for (std::size_t own = 0; own < 2; ++own) {
      const std::size_t k = 2 * player + own;
      const std::size_t other = 2 * player + (1 - own);
      if (report.marginal_limits[k].is_zero()) continue;
      if (report.limits[k] < report.limits[other] - tolerance) {
        report.failures.push_back(std::string("lim ") + names[k] + " < lim " + names[other]);
      }
    }
  }
  report.inequalities_hold = report.failures.empty();
  return report;
}

NeWitness ne_witness_sequence(const PayoffTables& X, const MixedProfile& ne) {
  if (!is_nash(X, ne)) throw DomainError("profile (q, r) = (" + ne.q.str() + ", " + ne.r.str() + ") is not a Nash equilibrium");
  const Rational zero, one(1);
  auto interior = [&](const Rational& v) { return v > zero && v < one; };

  NeWitness w;
  if (interior(ne.q) && interior(ne.r)) {
    const auto d = ne.segre();
    for (std::size_t k = 0; k < 4; ++k) w.sequence[k] = EpsSeries{{d.p[k], 0, 0, 0}};
    w.case_label = "totally mixed: constant sequence";
    w.threshold = 2;
    w.report = evaluate_witness(X, w.sequence);
    return w;
  }

  // Relabel so that the row player plays row 2 purely and, if the column
  // player is pure as well, column 2.
  PayoffTables Y = X;
  MixedProfile s = ne;
  std::vector<Relabel> ops;
  auto apply = [&](Relabel op) {
    Y = relabel(Y, op);
    if (op == Relabel::RowSwap) s.q = one - s.q;
    if (op == Relabel::ColSwap) s.r = one - s.r;
    if (op == Relabel::Transpose) std::swap(s.q, s.r);
    ops.push_back(op);
  };
  if (interior(s.q)) apply(Relabel::Transpose);
  if (s.q == one) apply(Relabel::RowSwap);
  if (s.r == one) apply(Relabel::ColSwap);

  const auto& A = Y.A;
  const auto& B = Y.B;
  WitnessSequence seq;
  if (interior(s.r)) {
    const Rational r = s.r;
    const Rational rest = one - r;
    if (A[0][0] <= A[0][1]) {
      seq = {eps(0, 1), eps(0, 0, 1), EpsSeries{{r, -1, 0, 0}}, EpsSeries{{rest, 0, -1, 0}}};
      w.case_label = "semi-mixed NE, a11 <= a12";
    } else {
      seq = {eps(0, 0, 1), eps(0, 1), EpsSeries{{r, -1, 0, 0}}, EpsSeries{{rest, 0, -1, 0}}};
      w.case_label = "semi-mixed NE, a11 > a12";
    }
  } else if (A[0][0] <= A[0][1] && B[0][0] <= B[1][0]) {
    seq = {eps(0, 1), eps(0, 0, 1), eps(0, 0, 1), eps(1, -1, -2)};
    w.case_label = "pure NE, a11 <= a12 and b11 <= b21";
  } else if (A[0][0] >= A[0][1] && B[0][0] >= B[1][0]) {
    seq = {eps(0, 0, 1), eps(0, 1), eps(0, 1), eps(1, -2, -1)};
    w.case_label = "pure NE, a11 >= a12 and b11 >= b21";
  } else if (A[0][0] <= A[0][1]) {
    seq = {eps(0, 0, 1), eps(0, 0, 0, 1), eps(0, 1), eps(1, -1, -1, -1)};
    w.case_label = "pure NE, a11 <= a12 and b11 >= b21";
  } else {
    seq = {eps(0, 0, 1), eps(0, 1), eps(0, 0, 0, 1), eps(1, -1, -1, -1)};
    w.case_label = "pure NE, a11 >= a12 and b11 <= b21";
  }
  if (!ops.empty()) w.case_label += " (after relabeling strategies/players)";

  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const auto perm = relabel_perm(*it);
    WitnessSequence back;
    for (std::size_t k = 0; k < 4; ++k) back[k] = seq[static_cast<std::size_t>(perm[k])];
    seq = back;
  }
  w.sequence = seq;
  w.threshold = positivity_threshold(seq);
  w.report = evaluate_witness(X, seq);
  return w;
}

CooperationWitness cooperation_witness(const PayoffTables& X) {
  const auto& A = X.A;
  const auto& B = X.B;
  if (B[0][0] != A[0][0] || B[0][1] != A[1][0] || B[1][0] != A[0][1] || B[1][1] != A[1][1]) {
    throw DomainError("cooperation witness needs a symmetric game with B = A^T");
  }
  const Rational &a11 = A[0][0], &a12 = A[0][1], &a21 = A[1][0], &a22 = A[1][1];
  if (!(a21 > a11)) throw DomainError("payoff ordering violated: a21 > a11 does not hold");
  if (!(a11 > a22)) throw DomainError("payoff ordering violated: a11 > a22 does not hold");
  if (!(a22 > a12)) throw DomainError("payoff ordering violated: a22 > a12 does not hold");

  CooperationWitness w;
  w.lambda = (a11 - a22) / (a21 - a22);
  w.sequence = {eps(1, 0, -1, -1), eps(0, 0, 0, 1), EpsSeries{{0, 0, w.lambda, 0}},
                EpsSeries{{0, 0, Rational(1) - w.lambda, 0}}};
  w.targets = {a11, a11, a11, a22};
  w.report = evaluate_witness(X, w.sequence);

  const auto& last = w.report.ladder.back().payoffs;
  const Rational tol = Rational(1, 1000000);
  w.raw_inequalities_hold = last[0] - last[1] >= -tol && last[2] - last[3] >= -tol;

  w.limits_match = true;
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(w.report.limits[k] - w.targets[k].to_double()) > 1e-6) w.limits_match = false;
  }

  w.gaps_monotone = true;
  for (std::size_t i = 1; i < w.report.ladder.size(); ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational prev = (w.report.ladder[i - 1].payoffs[k] - w.targets[k]).abs();
      const Rational cur = (w.report.ladder[i].payoffs[k] - w.targets[k]).abs();
      if (cur > prev) w.gaps_monotone = false;
    }
  }
  return w;
}

ParetoReport pareto_sweep(const PayoffTables& X, int grid, std::uint64_t seed) {
  if (grid < 0) throw DomainError("grid must be nonnegative");
  ParetoReport report;
  std::array<Rational, 4> ne;
  const auto tmn = totally_mixed_nash(X);
  if (tmn.status == TotallyMixedNash::Status::Found) {
    ne = tmn.profile->segre().p;
    report.reference = "totally-mixed";
  } else {
    const auto pure = pure_nash(X);
    if (pure.size() != 1) throw DomainError("game has no totally mixed Nash equilibrium and no unique pure one");
    ne = {0, 0, 0, 0};
    ne[static_cast<std::size_t>(2 * (pure[0].first - 1) + (pure[0].second - 1))] = Rational(1);
    report.reference = "pure";
  }
  for (std::size_t k = 0; k < 4; ++k) report.ne_distribution[k] = ne[k].to_double();
  const auto [pi1, pi2] = expected_payoffs(X, ne);
  report.ne_pi1 = pi1.to_double();
  report.ne_pi2 = pi2.to_double();
  if (grid == 0) return report;

  constexpr double weak = 1e-12;
  constexpr double strict = 1e-9;
  for (const auto& p : sample_curve_points(X, grid, seed)) {
    if (!std::all_of(p.begin(), p.end(), [](double v) { return v > 0; })) continue;
    ++report.samples;
    double v1 = 0, v2 = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      v1 += X.A[k / 2][k % 2].to_double() * p[k];
      v2 += X.B[k / 2][k % 2].to_double() * p[k];
    }
    const bool weakly = v1 >= report.ne_pi1 - weak && v2 >= report.ne_pi2 - weak;
    const bool strictly = v1 > report.ne_pi1 + strict || v2 > report.ne_pi2 + strict;
    if (weakly && strictly) report.dominating.push_back({p, v1, v2});
  }
  return report;
}

}  // namespace spohn
