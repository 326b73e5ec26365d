#include <gtest/gtest.h>

#include "spohn/error.hpp"
#include "spohn/game.hpp"
#include "spohn/spohn_geometry.hpp"
#include "support/generators.hpp"

namespace spohn {
namespace {

using testing::game;

const PayoffTables kPD = game({2, 0, 3, 1}, {2, 3, 0, 1});
const PayoffTables kBoS1 = game({3, 0, 0, 2}, {2, 1, 0, 3});

JointDistribution uniform() { return JointDistribution::make(Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)); }

TEST(Bimatrix, ParsesTextForm) {
  EXPECT_EQ(PayoffTables::parse_bimatrix("2,2 0,3; 3,0 1,1"), kPD);
  EXPECT_THROW(PayoffTables::parse_bimatrix("2,2 0,3"), ParseError);
  EXPECT_THROW(PayoffTables::parse_bimatrix("2,2 0 3; 3,0 1,1"), ParseError);
}

TEST(ConditionalPayoffs, PrisonersDilemmaUniform) {
  const auto e = conditional_expected_payoffs(kPD, uniform());
  EXPECT_EQ(e, (std::array<Rational, 4>{1, 2, 1, 2}));
}

TEST(ConditionalPayoffs, SingleCellSupport) {
  const auto p = JointDistribution::make(1, 0, 0, 0);
  const auto partial = partial_conditional_payoffs(kPD, p);
  EXPECT_EQ(*partial.values[0], Rational(2));
  EXPECT_FALSE(partial.values[1]);
  EXPECT_EQ(*partial.values[2], Rational(2));
  EXPECT_FALSE(partial.values[3]);
  try {
    conditional_expected_payoffs(kPD, p);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("E2^(1)"), std::string::npos);
  }
}

TEST(ConditionalPayoffs, ConstantTable) {
  const auto X = game({7, 7, 7, 7}, {1, 2, 3, 4});
  const auto p = JointDistribution::make(Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(4, 10));
  const auto e = conditional_expected_payoffs(X, p);
  EXPECT_EQ(e[0], Rational(7));
  EXPECT_EQ(e[1], Rational(7));
}

TEST(JointDistribution, Validation) {
  EXPECT_THROW(JointDistribution::make(1, 1, 0, 0), DomainError);
  EXPECT_THROW(JointDistribution::make(2, -1, 0, 0), DomainError);
  EXPECT_TRUE(uniform().totally_mixed());
  EXPECT_FALSE(JointDistribution::make(1, 0, 0, 0).totally_mixed());
}

TEST(TotallyMixedNash, MatchingPennies) {
  const auto r = totally_mixed_nash(game({1, -1, -1, 1}, {-1, 1, 1, -1}));
  ASSERT_EQ(r.status, TotallyMixedNash::Status::Found);
  EXPECT_EQ(r.profile->q, Rational(1, 2));
  EXPECT_EQ(r.profile->r, Rational(1, 2));
}

TEST(TotallyMixedNash, PrisonersDilemmaDegenerate) {
  EXPECT_EQ(totally_mixed_nash(kPD).status, TotallyMixedNash::Status::Degenerate);
}

TEST(TotallyMixedNash, BachOrStravinsky) {
  const auto r = totally_mixed_nash(kBoS1);
  ASSERT_EQ(r.status, TotallyMixedNash::Status::Found);
  EXPECT_EQ(r.profile->q, Rational(3, 4));
  EXPECT_EQ(r.profile->r, Rational(2, 5));
  EXPECT_TRUE(is_nash(kBoS1, *r.profile));
}

TEST(TotallyMixedNash, NoneWhenOutsideInterval) {
  // dominant strategies with nonzero denominators
  const auto r = totally_mixed_nash(game({3, 2, 1, 1}, {3, 1, 2, 1}));
  EXPECT_EQ(r.status, TotallyMixedNash::Status::None);
}

TEST(TotallyMixedNash, IndifferenceHoldsExactly) {
  testing::GameSampler sampler(11);
  for (int n = 0; n < 50; ++n) {
    const auto X = sampler.with_interior_nash();
    const auto s = *totally_mixed_nash(X).profile;
    const Rational one(1);
    EXPECT_EQ(X.A[0][0] * s.r + X.A[0][1] * (one - s.r), X.A[1][0] * s.r + X.A[1][1] * (one - s.r));
    EXPECT_EQ(X.B[0][0] * s.q + X.B[1][0] * (one - s.q), X.B[0][1] * s.q + X.B[1][1] * (one - s.q));
  }
}

TEST(PureNash, Examples) {
  EXPECT_EQ(pure_nash(kPD), (std::vector<std::pair<int, int>>{{2, 2}}));
  EXPECT_EQ(pure_nash(kBoS1), (std::vector<std::pair<int, int>>{{1, 1}, {2, 2}}));
  EXPECT_EQ(pure_nash(game({1, 1, 1, 1}, {1, 1, 1, 1})).size(), 4u);
}

TEST(Konstanz, SymmetricGameVanishesOnDiagonal) {
  for (int k = 0; k <= 10; ++k) {
    const Rational pi = Rational(1) + Rational(k, 10);  // between a22 and a11
    EXPECT_TRUE(konstanz_matrix(kPD, pi, pi).determinant.is_zero()) << pi;
  }
  EXPECT_TRUE(konstanz_matrix(kPD, 2, 2).determinant.is_zero());
}

TEST(Konstanz, HugePayoffNonzero) {
  const auto X = game({1, 2, 0, 3}, {6, 1, 4, 0});
  EXPECT_FALSE(konstanz_matrix(X, 1000000, 3).determinant.is_zero());
}

TEST(Konstanz, RowLayout) {
  const auto k = konstanz_matrix(kPD, 5, 7);
  EXPECT_EQ(k.entries[0], (std::vector<Rational>{3, 5, 0, 0}));
  EXPECT_EQ(k.entries[1], (std::vector<Rational>{0, 0, 2, 4}));
  EXPECT_EQ(k.entries[2], (std::vector<Rational>{5, 0, 7, 0}));
  EXPECT_EQ(k.entries[3], (std::vector<Rational>{0, 4, 0, 6}));
}

TEST(DeMembership, Examples) {
  EXPECT_EQ(de_membership(kPD, JointDistribution::make(1, 0, 0, 0)), DeStatus::BoundaryUndecided);
  EXPECT_EQ(de_membership(kPD, uniform()), DeStatus::NotDE);
  const auto s = *totally_mixed_nash(kBoS1).profile;
  EXPECT_EQ(de_membership(kBoS1, s.segre()), DeStatus::DE);
}

TEST(NeWitness, PrisonersDilemmaPureCase) {
  const auto w = ne_witness_sequence(kPD, MixedProfile{0, 0});
  EXPECT_EQ(w.case_label, "pure NE, a11 >= a12 and b11 >= b21");
  EXPECT_EQ(w.sequence[0].str(), "1/r^2");
  EXPECT_EQ(w.sequence[1].str(), "1/r");
  EXPECT_EQ(w.sequence[2].str(), "1/r");
  EXPECT_EQ(w.sequence[3].str(), "1 - 2/r - 1/r^2");
  EXPECT_TRUE(w.report.inequalities_hold) << ::testing::PrintToString(w.report.failures);
}

TEST(NeWitness, LowerPayoffCase) {
  // a11 <= a12, b11 <= b21, pure NE at (2,2)
  const auto X = game({0, 1, 2, 3}, {0, 2, 1, 3});
  const auto w = ne_witness_sequence(X, MixedProfile{0, 0});
  EXPECT_EQ(w.case_label, "pure NE, a11 <= a12 and b11 <= b21");
  EXPECT_EQ(w.sequence[0].str(), "1/r");
  EXPECT_EQ(w.sequence[1].str(), "1/r^2");
  EXPECT_EQ(w.sequence[2].str(), "1/r^2");
  EXPECT_EQ(w.sequence[3].str(), "1 - 1/r - 2/r^2");
  EXPECT_TRUE(w.report.inequalities_hold);
}

TEST(NeWitness, InteriorIsConstant) {
  const auto s = *totally_mixed_nash(kBoS1).profile;
  const auto w = ne_witness_sequence(kBoS1, s);
  for (const auto& e : w.sequence) {
    EXPECT_TRUE(e.c[1].is_zero() && e.c[2].is_zero() && e.c[3].is_zero());
  }
  EXPECT_TRUE(w.report.inequalities_hold);
  const auto e = w.report.ladder.front().payoffs;
  EXPECT_EQ(e[0], e[1]);
  EXPECT_EQ(e[2], e[3]);
}

TEST(NeWitness, RejectsNonEquilibrium) {
  EXPECT_THROW(ne_witness_sequence(kPD, MixedProfile{1, 1}), DomainError);
}

TEST(NeWitness, AllBoundaryEquilibriaOfRandomGames) {
  testing::GameSampler sampler(23);
  int checked = 0;
  for (int n = 0; n < 200; ++n) {
    const auto X = sampler.uniform();
    std::vector<MixedProfile> profiles;
    for (const auto& [i, j] : pure_nash(X)) profiles.push_back({i == 1 ? 1 : 0, j == 1 ? 1 : 0});
    // semi-mixed: row player pure, column player indifferent
    for (int row = 0; row < 2; ++row) {
      const Rational d = X.B[row][0] - X.B[row][1];
      if (!d.is_zero()) continue;
      const MixedProfile s{row == 0 ? 1 : 0, Rational(1, 3)};
      if (is_nash(X, s)) profiles.push_back(s);
    }
    for (const auto& s : profiles) {
      const auto w = ne_witness_sequence(X, s);
      ++checked;
      for (long r : {static_cast<long>(w.threshold), static_cast<long>(w.threshold) + 1, 1000L}) {
        Rational sum;
        for (const auto& e : w.sequence) {
          const Rational v = e.at(Rational(r));
          EXPECT_GT(v.sign(), 0);
          sum += v;
        }
        EXPECT_EQ(sum, Rational(1));
      }
      EXPECT_TRUE(w.report.inequalities_hold) << w.case_label;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Cooperation, PrisonersDilemma) {
  const auto w = cooperation_witness(kPD);
  EXPECT_EQ(w.lambda, Rational(1, 2));
  EXPECT_TRUE(w.ok());
  EXPECT_EQ(w.targets, (std::array<Rational, 4>{2, 2, 2, 1}));
  Rational sum;
  for (const auto& e : w.sequence) sum += e.at(Rational(1000000));
  EXPECT_EQ(sum, Rational(1));
}

TEST(Cooperation, OtherLambda) {
  const auto w = cooperation_witness(game({5, 0, 6, 1}, {5, 6, 0, 1}));
  EXPECT_EQ(w.lambda, Rational(4, 5));
  EXPECT_TRUE(w.ok());
}

TEST(Cooperation, OrderingViolated) {
  try {
    cooperation_witness(game({4, 0, 3, 1}, {4, 3, 0, 1}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("a21 > a11"), std::string::npos);
  }
  EXPECT_THROW(cooperation_witness(kBoS1), DomainError);
}

// The textbook sequence with p12 = 1/r sends E2^(2) to a21 rather than a22,
// which breaks the column player's inequality.
TEST(Cooperation, FirstOrderSequenceFails) {
  const Rational lambda(1, 2);
  const WitnessSequence naive{EpsSeries{{1, -1, -1, 0}}, EpsSeries{{0, 1, 0, 0}}, EpsSeries{{0, 0, lambda, 0}},
                              EpsSeries{{0, 0, Rational(1) - lambda, 0}}};
  const auto report = evaluate_witness(kPD, naive);
  EXPECT_NEAR(report.limits[0], 2.0, 1e-6);
  EXPECT_NEAR(report.limits[1], 2.0, 1e-6);
  EXPECT_NEAR(report.limits[2], 2.0, 1e-6);
  EXPECT_NEAR(report.limits[3], 3.0, 1e-6);
  EXPECT_FALSE(report.inequalities_hold);
}

TEST(Pareto, PrisonersDilemmaHasCooperativePoints) {
  const auto r = pareto_sweep(kPD, 400, 7);
  EXPECT_EQ(r.reference, "pure");
  EXPECT_DOUBLE_EQ(r.ne_pi1, 1.0);
  bool strict_both = false;
  for (const auto& p : r.dominating) strict_both = strict_both || (p.pi1 > 1.0 && p.pi2 > 1.0);
  EXPECT_TRUE(strict_both);
}

TEST(Pareto, ConstantSumHasNoDomination) {
  const auto r = pareto_sweep(game({1, -1, -1, 1}, {-1, 1, 1, -1}), 300, 3);
  EXPECT_EQ(r.reference, "totally-mixed");
  EXPECT_TRUE(r.dominating.empty());
}

TEST(Pareto, ZeroGrid) {
  const auto r = pareto_sweep(kBoS1, 0, 1);
  EXPECT_EQ(r.samples, 0);
  EXPECT_TRUE(r.dominating.empty());
}

TEST(Pareto, NoReferenceEquilibrium) {
  EXPECT_THROW(pareto_sweep(game({0, 0, 0, 0}, {1, 0, 0, 1}), 10, 1), DomainError);
}

}  // namespace
}  // namespace spohn
