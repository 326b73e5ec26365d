#include <gtest/gtest.h>

#include <cmath>

#include "spohn/error.hpp"
#include "spohn/spohn_geometry.hpp"
#include "support/generators.hpp"

namespace spohn {
namespace {

using testing::game;

const PayoffTables kPD = game({2, 0, 3, 1}, {2, 3, 0, 1});
const PayoffTables kGeneric = game({1, 2, 0, 3}, {6, 1, 4, 0});
const PayoffTables kNonGeneric = game({1, 1, 2, 0}, {3, -2, -1, 4});
const PayoffTables kBoS1 = game({3, 0, 0, 2}, {2, 1, 0, 3});

MultiPoly P4(const std::string& s) { return MultiPoly::parse(s, joint_vars()); }
MultiPoly P3(const std::string& s) { return MultiPoly::parse(s, plane_vars()); }

bool nonzero(const std::vector<Rational>& v) {
  return std::any_of(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
}

TEST(BuildQuadrics, PrisonersDilemma) {
  const auto q = build_quadrics(kPD);
  EXPECT_EQ(q.q1, P4("p11p21 - p11p22 + 3p12p21 + p12p22"));
  EXPECT_EQ(q.q2, P4("p11p12 - p11p22 + 3p12p21 + p21p22"));
}

TEST(BuildQuadrics, GenericExample) {
  const auto q = build_quadrics(kGeneric);
  EXPECT_EQ(q.q1, P4("-p11p21 + 2p11p22 - 2p12p21 + p12p22"));
  EXPECT_EQ(q.q2, P4("-5p11p12 - 6p11p22 - 3p12p21 - 4p21p22"));
}

TEST(BuildQuadrics, ConstantTable) { EXPECT_TRUE(build_quadrics(game({4, 4, 4, 4}, {1, 2, 3, 4})).q1.is_zero()); }

TEST(BuildQuadrics, CoordinatePointsOnVariety) {
  testing::GameSampler sampler(5);
  for (int n = 0; n < 20; ++n) {
    const auto q = build_quadrics(sampler.uniform());
    for (const ProjPoint& p : {ProjPoint{1, 0, 0, 0}, ProjPoint{0, 1, 0, 0}, ProjPoint{0, 0, 1, 0}, ProjPoint{0, 0, 0, 1}}) {
      EXPECT_TRUE(variety_membership(q, p));
    }
  }
}

TEST(BuildCubic, GenericExample) {
  const auto s = build_cubic(kGeneric);
  EXPECT_EQ(s.c, (std::array<Rational, 7>{-10, -6, -5, -4, -3, -8, -18}));
  EXPECT_EQ(s.f, P3("-10x^2y - 6x^2z - 5xy^2 - 18xyz - 4xz^2 - 3y^2z - 8yz^2"));
}

TEST(BuildCubic, BachOrStravinsky) {
  EXPECT_EQ(build_cubic(kBoS1).f, P3("x^2y - 2xy^2 + 3x^2z - xyz + 2y^2z + 9xz^2"));
}

TEST(BuildCubic, ConstantPayoffsGiveZero) {
  EXPECT_TRUE(build_cubic(game({1, 2, 3, 4}, {5, 5, 5, 5})).f.is_zero());
}

TEST(BuildCubic, EqualsLinearCombinationOfQuadrics) {
  testing::GameSampler sampler(8);
  for (int n = 0; n < 20; ++n) {
    const auto X = sampler.uniform();
    const auto q = build_quadrics(X);
    auto part = [](const MultiPoly& p, int power) {
      MultiPoly out(plane_vars());
      const MultiPoly coef = p.coefficient_of(3, power);
      for (const auto& [e, c] : coef.terms()) out.add_term({e[0], e[1], e[2]}, c);
      return out;
    };
    EXPECT_EQ(build_cubic(X).f, part(q.q1, 1) * part(q.q2, 0) - part(q.q2, 1) * part(q.q1, 0));
  }
}

TEST(ZeroCubic, Conditions) {
  EXPECT_EQ(zero_cubic_classify(game({2, 2, 2, 2}, {1, 5, 3, 4})), 1);
  EXPECT_EQ(zero_cubic_classify(game({1, 2, 1, 2}, {3, 3, 4, 4})), 2);
  EXPECT_EQ(zero_cubic_classify(game({1, 1, 5, 1}, {2, 7, 2, 2})), 3);
  EXPECT_EQ(zero_cubic_classify(game({1, 1, 1, 5}, {2, 2, 2, 7})), 4);
  EXPECT_FALSE(zero_cubic_classify(kGeneric));
  EXPECT_FALSE(build_cubic(kGeneric).f.is_zero());
}

TEST(ZeroCubic, MatchesVanishingCubic) {
  testing::GameSampler sampler(9);
  for (int n = 0; n < 2000; ++n) {
    PayoffTables X;
    for (std::size_t k = 0; k < 4; ++k) {
      X.A[k / 2][k % 2] = Rational(sampler.entry(0, 1));
      X.B[k / 2][k % 2] = Rational(sampler.entry(0, 1));
    }
    EXPECT_EQ(zero_cubic_classify(X).has_value(), build_cubic(X).f.is_zero());
  }
}

TEST(ClassifyCases, KnownGames) {
  // the symmetric game also satisfies the transposed system of case 10
  EXPECT_EQ(classify_cases(kPD), (std::vector<int>{9, 10}));
  EXPECT_EQ(classify_cases(kNonGeneric), (std::vector<int>{1}));
  EXPECT_TRUE(classify_cases(kGeneric).empty());
}

TEST(Decompose, PrisonersDilemmaLineAndConic) {
  const auto f = build_cubic(kPD).f;
  const auto d = decompose_cubic(f);
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.components[0].kind, ComponentKind::Line);
  EXPECT_EQ(d.components[0].poly, P3("y - z"));
  EXPECT_EQ(d.components[1].kind, ComponentKind::Conic);
  EXPECT_TRUE(proportional(d.components[0].poly * d.components[1].poly, f));
}

TEST(Decompose, GenericIsIrreducible) {
  const auto d = decompose_cubic(build_cubic(kGeneric).f);
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].kind, ComponentKind::Cubic);
  EXPECT_FALSE(d.has_line());
}

TEST(Decompose, MonomialCubic) {
  const auto d = decompose_cubic(P3("xyz"));
  ASSERT_EQ(d.components.size(), 3u);
  for (const auto& c : d.components) EXPECT_EQ(c.kind, ComponentKind::Line);
}

TEST(Decompose, RepeatedLines) {
  const auto d = decompose_cubic(P3("x^2 y"));
  ASSERT_EQ(d.components.size(), 2u);
  int total = 0;
  for (const auto& c : d.components) total += c.multiplicity;
  EXPECT_EQ(total, 3);
  const auto split = decompose_cubic(P3("x") * P3("y^2 - 4z^2"));
  EXPECT_EQ(split.components.size(), 3u);
  const auto irreducible_pair = decompose_cubic(P3("x") * P3("y^2 - 2z^2"));
  ASSERT_EQ(irreducible_pair.components.size(), 2u);
  EXPECT_EQ(irreducible_pair.components[1].kind, ComponentKind::Conic);
}

TEST(Decompose, Errors) {
  EXPECT_THROW(decompose_cubic(MultiPoly(plane_vars())), DomainError);
  EXPECT_THROW(decompose_cubic(P3("x^3 + y^2 z")), DomainError);
}

TEST(SmoothPoint, ConicCandidates) {
  const auto g = P3("2xy - 3xz + 5yz");
  const auto p = smooth_rational_point({ComponentKind::Conic, g, 1, std::nullopt});
  // first candidate in order [0:1:0], [1:0:0], [0:0:1]; [1:0:0] is smooth too
  EXPECT_EQ(p, (ProjPoint{0, 1, 0}));
  EXPECT_TRUE(nonzero(gradient(g, {1, 0, 0})));
  const auto h = P3("2xy - 3xz + 5yz + 7z^2");
  EXPECT_EQ(smooth_rational_point({ComponentKind::Conic, h, 1, std::nullopt}), (ProjPoint{0, 1, 0}));
}

TEST(SmoothPoint, LineAndSearch) {
  EXPECT_EQ(smooth_rational_point({ComponentKind::Line, P3("x + y"), 1, std::nullopt}), (ProjPoint{1, -1, 0}));
  EXPECT_EQ(smooth_rational_point({ComponentKind::Line, P3("z"), 1, std::nullopt}), (ProjPoint{1, 0, 0}));
  // no coordinate point lies on this conic
  const auto g = P3("x^2 + y^2 - 2z^2");
  const auto p = smooth_rational_point({ComponentKind::Conic, g, 1, std::nullopt});
  EXPECT_TRUE(g.evaluate(p.coords()).is_zero());
  EXPECT_TRUE(nonzero(gradient(g, p)));
  EXPECT_THROW(smooth_rational_point({ComponentKind::Conic, P3("x^2 + y^2 + z^2"), 1, std::nullopt}), DomainError);
}

TEST(Analyze, Verdicts) {
  const auto pd = analyze_cubic(kPD);
  EXPECT_EQ(pd.kind, VerdictKind::Reducible);
  for (const auto& c : pd.components) ASSERT_TRUE(c.point);
  EXPECT_EQ(analyze_cubic(kGeneric).kind, VerdictKind::Irreducible);
  const auto zero = analyze_cubic(game({1, 2, 1, 2}, {3, 3, 4, 4}));
  EXPECT_EQ(zero.kind, VerdictKind::ZeroCubic);
  EXPECT_EQ(zero.zero_condition, 2);
}

TEST(Membership, W) {
  EXPECT_TRUE(w_membership(JointDistribution::make(1, 0, 0, 0)));
  EXPECT_FALSE(w_membership(JointDistribution::make(Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4))));
  EXPECT_TRUE(w_membership(JointDistribution::make(Rational(1, 2), Rational(1, 2), 0, 0)));
}

TEST(Membership, Variety) {
  const auto q = build_quadrics(kPD);
  EXPECT_TRUE(variety_membership(q, {0, 0, 0, 1}));
  EXPECT_TRUE(variety_membership(q, {1, 0, 0, 0}));
  EXPECT_FALSE(variety_membership(q, {1, 1, 1, 1}));
}

TEST(Sampling, PointsSatisfyCubic) {
  testing::GameSampler sampler(12);
  for (int n = 0; n < 20; ++n) {
    const auto X = sampler.generic();
    const auto f = build_cubic(X).f;
    const auto pts = sample_curve_points(X, 20, 100 + static_cast<std::uint64_t>(n));
    EXPECT_FALSE(pts.empty());
    for (const auto& p : pts) {
      const std::array<double, 3> xyz{p[0], p[1], p[2]};
      EXPECT_LT(std::abs(f.evaluate(std::span<const double>(xyz))), 1e-8);
    }
  }
}

TEST(Invariance, AffineRescalingKeepsCasesAndComponents) {
  testing::GameSampler sampler(31);
  for (int n = 0; n < 40; ++n) {
    const auto X = sampler.with_case(1 + n % 12);
    const Rational l1(sampler.entry(1, 4)), l2(-sampler.entry(1, 4)), s1(sampler.entry()), s2(sampler.entry());
    PayoffTables Y;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Y.A[i][j] = l1 * X.A[i][j] + s1;
        Y.B[i][j] = l2 * X.B[i][j] + s2;
      }
    }
    const auto cx = build_cubic(X), cy = build_cubic(Y);
    for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(cy.c[k], l1 * l2 * cx.c[k]);
    EXPECT_EQ(classify_cases(X), classify_cases(Y));
    const auto dx = decompose_cubic(cx.f), dy = decompose_cubic(cy.f);
    ASSERT_EQ(dx.components.size(), dy.components.size());
    for (std::size_t k = 0; k < dx.components.size(); ++k) EXPECT_EQ(dx.components[k].poly, dy.components[k].poly);
  }
}

}  // namespace
}  // namespace spohn
