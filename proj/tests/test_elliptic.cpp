#include <gtest/gtest.h>

#include "spohn/elliptic.hpp"
#include "spohn/error.hpp"
#include "spohn/spohn_geometry.hpp"
#include "support/generators.hpp"

namespace spohn {
namespace {

using testing::game;

const PayoffTables kGeneric = game({1, 2, 0, 3}, {6, 1, 4, 0});
const PayoffTables kNonGeneric = game({1, 1, 2, 0}, {3, -2, -1, 4});
const std::array<PayoffTables, 4> kBoS{game({3, 0, 0, 2}, {2, 1, 0, 3}), game({3, 1, 0, 2}, {2, 0, 0, 3}),
                                       game({3, 0, 0, 2}, {2, 0, 1, 3}), game({3, 0, 1, 2}, {2, 0, 0, 3})};

MultiPoly P(const std::string& s) { return MultiPoly::parse(s, space_vars()); }
MultiPoly P3(const std::string& s) { return MultiPoly::parse(s, plane_vars()); }

QuadricPair non_spohn() { return {P("x^2+y^2-z^2-t^2"), P("xz-zy+yt-zt"), ProjPoint{1, 1, 1, 1}}; }

PlaneCubic cubic(const std::string& s) { return PlaneCubic::from_poly(P3(s)); }

TEST(Translate, IdentityForSpohnQuadrics) {
  const auto qp = QuadricPair::from_game(kGeneric);
  const auto moved = translate_to_infinity(qp);
  EXPECT_EQ(moved.pair.P1, qp.P1);
  EXPECT_EQ(moved.pair.P2, qp.P2);
  EXPECT_FALSE(moved.swapped);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(moved.Q[i][j], Rational(i == j ? 1 : 0));
  }
}

TEST(Translate, NonSpohnPair) {
  const auto moved = translate_to_infinity(non_spohn());
  EXPECT_TRUE(moved.pair.P1.coefficient({0, 0, 0, 2}).is_zero());
  EXPECT_TRUE(moved.pair.P2.coefficient({0, 0, 0, 2}).is_zero());
}

TEST(Translate, PermutesWhenLastCoordinateVanishes) {
  const auto q = build_quadrics(kGeneric);
  const QuadricPair qp(q.q1.renamed(space_vars()), q.q2.renamed(space_vars()), ProjPoint{1, 0, 0, 0});
  const auto moved = translate_to_infinity(qp);
  ASSERT_TRUE(moved.swapped);
  EXPECT_EQ(*moved.swapped, 0u);
  EXPECT_TRUE(moved.pair.P1.evaluate(std::vector<Rational>{0, 0, 0, 1}).is_zero());
  EXPECT_TRUE(moved.pair.P2.evaluate(std::vector<Rational>{0, 0, 0, 1}).is_zero());
  EXPECT_FALSE(j_invariant(cubic_from_quadrics(qp)).singular());
  EXPECT_EQ(*j_invariant(cubic_from_quadrics(qp)).value, Rational::parse("2810381476/227025"));
}

TEST(Translate, RejectsPointOffQuadrics) {
  const QuadricPair qp(P("x^2+y^2-z^2-t^2"), P("xz-zy+yt-zt"), ProjPoint{1, 2, 3, 4});
  EXPECT_THROW(translate_to_infinity(qp), DomainError);
}

TEST(SplitKLM, GenericExample) {
  const auto k = split_klm(QuadricPair::from_game(kGeneric));
  EXPECT_EQ(k.L1, P3("2x+y"));
  EXPECT_EQ(k.M1, P3("-xz-2yz"));
  EXPECT_EQ(k.L2, P3("-6x-4z"));
  EXPECT_EQ(k.M2, P3("-5xy-3yz"));
}

TEST(SplitKLM, PrisonersDilemmaIndependent) {
  const auto k = split_klm(QuadricPair::from_game(game({2, 0, 3, 1}, {2, 3, 0, 1})));
  EXPECT_EQ(k.L1, P3("-x+y"));
  EXPECT_EQ(k.L2, P3("-x+z"));
}

TEST(SplitKLM, DependentLinearParts) {
  const QuadricPair qp(P("xt + yz"), P("2xt + xy"), ProjPoint{0, 0, 0, 1});
  EXPECT_THROW(split_klm(qp), DomainError);
  const QuadricPair off(P("t^2 + xy"), P("xt"), ProjPoint{0, 0, 0, 1});
  EXPECT_THROW(split_klm(off), DomainError);
}

TEST(CubicFromQuadrics, Examples) {
  EXPECT_EQ(cubic_from_quadrics(QuadricPair::from_game(kGeneric)).poly(),
            P3("-10x^2y - 6x^2z - 5xy^2 - 18xyz - 4xz^2 - 3y^2z - 8yz^2"));
  EXPECT_EQ(cubic_from_quadrics(non_spohn()).poly(), P3("-x^3 - xy^2 + 3x^2z - y^2z - xz^2 + 2yz^2 - z^3"));
}

TEST(CubicFromQuadrics, MatchesSpohnCubic) {
  testing::GameSampler sampler(41);
  for (int n = 0; n < 20; ++n) {
    const auto X = sampler.uniform();
    const auto k = build_quadrics(X);
    const auto c = build_cubic(X).f;
    try {
      EXPECT_EQ(cubic_from_quadrics(QuadricPair::from_game(X)).poly(), c);
    } catch (const DomainError&) {
      // dependent linear parts only happen for degenerate tables
      EXPECT_TRUE(c.is_zero());
    }
  }
}

TEST(FromMatrices, SumsOffDiagonal) {
  RationalMatrix A(4, std::vector<Rational>(4)), B(4, std::vector<Rational>(4));
  A[0][0] = 1;
  A[1][1] = 1;
  A[2][2] = -1;
  A[3][3] = -1;
  B[0][2] = 1;
  B[1][2] = -1;
  B[1][3] = 1;
  B[2][3] = -1;
  const auto qp = QuadricPair::from_matrices(A, B, ProjPoint{1, 1, 1, 1});
  EXPECT_EQ(qp.P1, non_spohn().P1);
  EXPECT_EQ(qp.P2, non_spohn().P2);
}

TEST(PlaneCubic, RoundTrip) {
  const auto f = P3("x^3 + 6xyz - 3x^2y + 2z^3 + 9yz^2");
  const auto c = PlaneCubic::from_poly(f);
  EXPECT_EQ(c.coef[9], Rational(1));
  EXPECT_EQ(c.coef[3], Rational(-1));
  EXPECT_EQ(c.poly(), f);
}

TEST(Aronhold, Fermat) {
  const auto inv = aronhold(cubic("x^3+y^3+z^3"));
  EXPECT_EQ(inv.S, Rational(0));
  EXPECT_EQ(inv.T, Rational(1));
  EXPECT_EQ(inv.discriminant, Rational(-1, 1728));
  EXPECT_EQ(*j_invariant(cubic("x^3+y^3+z^3")).value, Rational(0));
}

TEST(Aronhold, Scaling) {
  const auto c = cubic("x^3 + 2y^3 - z^3 + xyz + 3x^2y");
  const Rational lambda(-3, 2);
  const auto a = aronhold(c), b = aronhold(c.scaled(lambda));
  EXPECT_EQ(b.S, lambda.pow(4) * a.S);
  EXPECT_EQ(b.T, lambda.pow(6) * a.T);
}

TEST(JInvariant, KnownValues) {
  EXPECT_EQ(j_invariant(spohn_plane_cubic(kGeneric)).str(), "2810381476/227025");
  EXPECT_TRUE(j_invariant(spohn_plane_cubic(kNonGeneric)).singular());
  EXPECT_EQ(aronhold(spohn_plane_cubic(kNonGeneric)).discriminant, Rational(0));
  EXPECT_EQ(j_invariant(cubic_from_quadrics(non_spohn())).str(), "65536/37");
  for (const auto& X : kBoS) EXPECT_EQ(j_invariant(spohn_plane_cubic(X)).str(), "365986170577/44976384");
}

TEST(Weierstrass, DerivedQuantities) {
  const WeierstrassCurve E{1, -1, 1, -3, 2};
  EXPECT_EQ(Rational(1728) * E.discriminant(), E.c4().pow(3) - E.c6().pow(2));
  const auto E1728 = WeierstrassCurve::short_form(1, 0);
  EXPECT_EQ(*E1728.j().value, Rational(1728));
}

TEST(Weierstrass, FromGenericSpohnCubic) {
  const auto c = spohn_plane_cubic(kGeneric);
  const auto E = weierstrass_from_cubic(c, {1, 0, 0});
  EXPECT_EQ(E.j().str(), "2810381476/227025");
  EXPECT_EQ(Rational(1728) * E.discriminant(), E.c4().pow(3) - E.c6().pow(2));
}

TEST(Weierstrass, BachOrStravinsky) {
  const auto E = weierstrass_from_cubic(spohn_plane_cubic(kBoS[0]), {1, 0, 0});
  EXPECT_EQ(E.j().str(), "365986170577/44976384");
}

TEST(Weierstrass, AlreadyNormalFlex) {
  const auto c = cubic("y^2z - x^3 - xz^2");
  const auto E = weierstrass_from_cubic(c, {0, 1, 0});
  EXPECT_EQ(E.j().str(), "1728");
  EXPECT_TRUE(q_isomorphic(E, WeierstrassCurve::short_form(1, 0)));
}

TEST(Weierstrass, Errors) {
  EXPECT_THROW(weierstrass_from_cubic(spohn_plane_cubic(kNonGeneric), {1, 0, 0}), DomainError);
  EXPECT_THROW(weierstrass_from_cubic(spohn_plane_cubic(kGeneric), {1, 1, 1}), DomainError);
}

TEST(Weierstrass, EveryCoordinateBasePoint) {
  const auto c = spohn_plane_cubic(kGeneric);
  const auto ref = weierstrass_from_cubic(c, {1, 0, 0});
  for (const ProjPoint& p : {ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}}) {
    const auto E = weierstrass_from_cubic(c, p);
    EXPECT_TRUE(q_isomorphic(ref, E)) << p.str();
  }
}

const Rational kTwA = Rational::parse("103072987022928/199086408481");
const Rational kTwB = Rational::parse("52977693274235725360768/88830563686545871");
const Rational kTwA2 = Rational::parse("2576824675573200/199086408481");
const Rational kTwB2 = Rational::parse("6622211659279465670096000/88830563686545871");

TEST(QIsomorphic, TwistExample) {
  const auto E1 = WeierstrassCurve::short_form(kTwA, kTwB);
  const auto E2 = WeierstrassCurve::short_form(kTwA2, kTwB2);
  EXPECT_EQ(E1.j().str(), "44564/446191");
  EXPECT_EQ(E2.j().str(), "44564/446191");
  EXPECT_EQ(kTwA2 / kTwA, Rational(25));
  EXPECT_EQ(kTwB2 / kTwB, Rational(125));
  EXPECT_FALSE(q_isomorphic(E1, E2));
  EXPECT_TRUE(q_isomorphic(E1, E1));
}

TEST(QIsomorphic, SpecialJ) {
  const auto j0 = WeierstrassCurve::short_form(0, 2);
  EXPECT_TRUE(q_isomorphic(j0, WeierstrassCurve::short_form(0, 2 * 64)));
  EXPECT_FALSE(q_isomorphic(j0, WeierstrassCurve::short_form(0, 2 * 8)));
  const auto j1728 = WeierstrassCurve::short_form(3, 0);
  EXPECT_TRUE(q_isomorphic(j1728, WeierstrassCurve::short_form(3 * 16, 0)));
  EXPECT_FALSE(q_isomorphic(j1728, WeierstrassCurve::short_form(3 * 4, 0)));
  EXPECT_THROW(q_isomorphic(WeierstrassCurve::short_form(0, 0), j0), DomainError);
}

TEST(QIsomorphic, TwistPoolIsEquivalenceRelation) {
  std::vector<std::pair<WeierstrassCurve, int>> pool;  // curve and its class label
  const std::array<std::pair<long, long>, 3> bases{{{2, 3}, {-5, 7}, {1, 1}}};
  int label = 0;
  for (const auto& [A, B] : bases) {
    for (const Rational u : {Rational(1), Rational(2), Rational(3), Rational(1, 2)}) {
      pool.push_back({WeierstrassCurve::short_form(u.pow(4) * A, u.pow(6) * B), label});
    }
    for (long d : {5L, -1L, 7L}) {
      pool.push_back({WeierstrassCurve::short_form(Rational(d * d * A), Rational(d * d * d * B)), label + 1 + static_cast<int>(d + 1)});
    }
    label += 100;
  }
  for (const auto& [E, l] : pool) {
    for (const auto& [F, m] : pool) EXPECT_EQ(q_isomorphic(E, F), l == m);
  }
}

TEST(GameEquivalence, BachOrStravinskyPairs) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = i + 1; k < 4; ++k) {
      const auto e = game_equivalence(kBoS[i], kBoS[k]);
      EXPECT_TRUE(e.same_j);
      ASSERT_TRUE(e.fully_equivalent);
      EXPECT_TRUE(*e.fully_equivalent) << i << "," << k;
    }
  }
}

TEST(GameEquivalence, DifferentJ) {
  const auto e = game_equivalence(kGeneric, kBoS[0]);
  EXPECT_FALSE(e.same_j);
  EXPECT_FALSE(*e.fully_equivalent);
}

TEST(GameEquivalence, AffineRescaling) {
  PayoffTables Y = kGeneric;
  for (auto& row : Y.A) {
    for (auto& v : row) v = Rational(3) * v - Rational(2);
  }
  for (auto& row : Y.B) {
    for (auto& v : row) v = Rational(-1, 2) * v + Rational(5);
  }
  const auto e = game_equivalence(kGeneric, Y);
  EXPECT_TRUE(e.same_j);
  EXPECT_TRUE(*e.fully_equivalent);
}

TEST(GameEquivalence, SingularNamesCases) {
  try {
    game_equivalence(kNonGeneric, kGeneric);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("cases: 1"), std::string::npos);
  }
}

TEST(Properties, ProjectiveInvarianceOfJ) {
  const auto f = spohn_plane_cubic(kGeneric).poly();
  const auto target = *j_invariant(spohn_plane_cubic(kGeneric)).value;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> small(-2, 2);
  int done = 0;
  while (done < 20) {
    RationalMatrix M(3, std::vector<Rational>(3));
    for (auto& row : M) {
      for (auto& v : row) v = small(rng);
    }
    const Rational det = determinant(M);
    if (det != Rational(1) && det != Rational(-1)) continue;
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(linear_form(plane_vars(), M[i]));
    EXPECT_EQ(*j_invariant(PlaneCubic::from_poly(f.compose(images))).value, target);
    ++done;
  }
}

TEST(Properties, BasePointIndependence) {
  testing::GameSampler sampler(53);
  for (int n = 0; n < 15; ++n) {
    const auto c = spohn_plane_cubic(sampler.generic());
    const auto E = weierstrass_from_cubic(c, {1, 0, 0});
    EXPECT_TRUE(q_isomorphic(E, weierstrass_from_cubic(c, {0, 1, 0})));
    EXPECT_TRUE(q_isomorphic(E, weierstrass_from_cubic(c, {0, 0, 1})));
  }
}

}  // namespace
}  // namespace spohn
