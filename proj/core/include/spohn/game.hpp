#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spohn/linalg.hpp"
#include "spohn/rational.hpp"

namespace spohn {

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

/// Payoff tables of a 2x2 game: A for the row player, B for the column player.
struct PayoffTables {
  Matrix2 A;
  Matrix2 B;

  /// Parses "a11,b11 a12,b12; a21,b21 a22,b22".
  static PayoffTables parse_bimatrix(std::string_view text);

  bool operator==(const PayoffTables&) const = default;
};

/// Joint distribution (p11, p12, p21, p22) on the closed simplex.
struct JointDistribution {
  std::array<Rational, 4> p;

  /// Validates nonnegativity and unit sum.
  static JointDistribution make(const Rational& p11, const Rational& p12, const Rational& p21, const Rational& p22);

  const Rational& p11() const { return p[0]; }
  const Rational& p12() const { return p[1]; }
  const Rational& p21() const { return p[2]; }
  const Rational& p22() const { return p[3]; }

  Rational row1() const { return p[0] + p[1]; }
  Rational row2() const { return p[2] + p[3]; }
  Rational col1() const { return p[0] + p[2]; }
  Rational col2() const { return p[1] + p[3]; }

  bool totally_mixed() const;
};

/// Independent mixed strategies: q for row 1, r for column 1.
struct MixedProfile {
  Rational q;
  Rational r;

  JointDistribution segre() const;
  bool operator==(const MixedProfile&) const = default;
};

/// E1^(1), E2^(1) (row player given row 1 / row 2) and E1^(2), E2^(2)
/// (column player given column 1 / column 2).
struct ConditionalPayoffs {
  std::array<std::optional<Rational>, 4> values;
};

/// All four quotients; throws DomainError naming the first undefined one.
std::array<Rational, 4> conditional_expected_payoffs(const PayoffTables& X, const JointDistribution& p);

/// Same quotients, leaving entries with a vanishing marginal undefined.
ConditionalPayoffs partial_conditional_payoffs(const PayoffTables& X, const JointDistribution& p);

/// Expected payoffs (pi1, pi2) of a joint distribution.
std::pair<Rational, Rational> expected_payoffs(const PayoffTables& X, const std::array<Rational, 4>& p);

struct TotallyMixedNash {
  enum class Status { Found, None, Degenerate };
  Status status;
  std::optional<MixedProfile> profile;
};

TotallyMixedNash totally_mixed_nash(const PayoffTables& X);

/// Pure equilibria as 1-based (row, column) cells in row-major order.
std::vector<std::pair<int, int>> pure_nash(const PayoffTables& X);

bool is_nash(const PayoffTables& X, const MixedProfile& profile);

struct KonstanzMatrix {
  Rational pi1;
  Rational pi2;
  RationalMatrix entries;
  Rational determinant;
};

KonstanzMatrix konstanz_matrix(const PayoffTables& X, const Rational& pi1, const Rational& pi2);

enum class DeStatus { DE, NotDE, BoundaryUndecided };

DeStatus de_membership(const PayoffTables& X, const JointDistribution& p);
std::string to_string(DeStatus s);

/// Polynomial in eps = 1/r of degree at most 3, used for witness sequences.
struct EpsSeries {
  std::array<Rational, 4> c;

  Rational at(const Rational& r) const;
  std::string str() const;
};

using WitnessSequence = std::array<EpsSeries, 4>;

struct LadderStep {
  Rational r;
  std::array<Rational, 4> p;
  std::array<Rational, 4> payoffs;
};

struct LimitReport {
  std::vector<LadderStep> ladder;
  /// Richardson estimate from the two largest ladder values.
  std::array<double, 4> limits{};
  /// Limits of the marginals (p1+, p2+, p+1, p+2).
  std::array<Rational, 4> marginal_limits;
  bool inequalities_hold = false;
  std::vector<std::string> failures;
};

/// Evaluates a witness sequence along r = 1e3, 1e4, 1e5, 1e6 and checks the
/// dependency-equilibrium limit inequalities with the given tolerance.
LimitReport evaluate_witness(const PayoffTables& X, const WitnessSequence& seq, double tolerance = 1e-6);

struct NeWitness {
  std::string case_label;
  WitnessSequence sequence;
  int threshold = 2;
  LimitReport report;
};

NeWitness ne_witness_sequence(const PayoffTables& X, const MixedProfile& ne);

struct CooperationWitness {
  Rational lambda;
  WitnessSequence sequence;
  std::array<Rational, 4> targets;
  LimitReport report;
  bool raw_inequalities_hold = false;
  bool limits_match = false;
  bool gaps_monotone = false;

  bool ok() const { return report.inequalities_hold && raw_inequalities_hold && limits_match && gaps_monotone; }
};

CooperationWitness cooperation_witness(const PayoffTables& X);

struct ParetoPoint {
  std::array<double, 4> p;
  double pi1;
  double pi2;
};

struct ParetoReport {
  std::string reference;  // "totally-mixed" or "pure"
  std::array<double, 4> ne_distribution{};
  double ne_pi1 = 0;
  double ne_pi2 = 0;
  int samples = 0;
  std::vector<ParetoPoint> dominating;
};

ParetoReport pareto_sweep(const PayoffTables& X, int grid, std::uint64_t seed);

}  // namespace spohn
