#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spohn/game.hpp"
#include "spohn/linalg.hpp"
#include "spohn/multipoly.hpp"
#include "spohn/proj_point.hpp"

namespace spohn {

inline const std::vector<std::string>& space_vars() {
  static const std::vector<std::string> v{"x", "y", "z", "t"};
  return v;
}

/// Two quadrics in (x, y, z, t) with a known common rational point.
struct QuadricPair {
  MultiPoly P1;
  MultiPoly P2;
  ProjPoint point;

  QuadricPair(MultiPoly p1, MultiPoly p2, ProjPoint pt);

  /// Quadrics v^T A v and v^T B v from symmetric-position 4x4 matrices;
  /// off-diagonal entries (i,j) and (j,i) are summed.
  static QuadricPair from_matrices(const RationalMatrix& A, const RationalMatrix& B, ProjPoint pt);

  /// The Spohn quadrics with (x, y, z, t) = (p11, p12, p21, p22) and point [0:0:0:1].
  static QuadricPair from_game(const PayoffTables& X);
};

struct TranslatedPair {
  QuadricPair pair;
  /// Coordinate swapped with t before translating, if any (0-based).
  std::optional<std::size_t> swapped;
  /// Old coordinates = Q * new coordinates.
  RationalMatrix Q;
};

TranslatedPair translate_to_infinity(const QuadricPair& qp);

struct KLM {
  MultiPoly L1, M1, L2, M2;  // in (x, y, z)
};

KLM split_klm(const QuadricPair& at_infinity);

/// C = a x^3 + b y^3 + c z^3 + 3d x^2y + 3e y^2z + 3f z^2x + 3g xy^2
///   + 3h yz^2 + 3i zx^2 + 6m xyz.
struct PlaneCubic {
  std::array<Rational, 10> coef;  // a, b, c, d, e, f, g, h, i, m

  static PlaneCubic from_poly(const MultiPoly& f);
  MultiPoly poly() const;
  PlaneCubic scaled(const Rational& lambda) const;
};

/// Runs translate_to_infinity, split_klm and forms L1*M2 - L2*M1.
PlaneCubic cubic_from_quadrics(const QuadricPair& qp);

struct AronholdInvariants {
  Rational S;
  Rational T;
  Rational discriminant;
};

AronholdInvariants aronhold(const PlaneCubic& c);

/// Finite j, or nullopt when the discriminant vanishes.
struct JResult {
  std::optional<Rational> value;
  bool singular() const { return !value.has_value(); }
  std::string str() const { return value ? value->str() : "singular"; }
};

JResult j_invariant(const PlaneCubic& c);

struct WeierstrassCurve {
  Rational a1, a2, a3, a4, a6;

  Rational b2() const;
  Rational b4() const;
  Rational b6() const;
  Rational b8() const;
  Rational c4() const;
  Rational c6() const;
  Rational discriminant() const;
  JResult j() const;

  /// y^2 = x^3 + A x + B.
  static WeierstrassCurve short_form(const Rational& A, const Rational& B);
};

/// Long Weierstrass model of a nonsingular plane cubic through a rational
/// point; the result is checked to have the cubic's j-invariant.
WeierstrassCurve weierstrass_from_cubic(const PlaneCubic& c, const ProjPoint& pt);

bool q_isomorphic(const WeierstrassCurve& E1, const WeierstrassCurve& E2);

struct GameEquivalence {
  Rational j1;
  Rational j2;
  bool same_j = false;
  /// nullopt only when no rational base point is available.
  std::optional<bool> fully_equivalent;
};

/// Spohn cubic of a game as a PlaneCubic in (x, y, z) = (p11, p12, p21).
PlaneCubic spohn_plane_cubic(const PayoffTables& X);

/// Default base point on a cubic: first of [1:0:0], [0:1:0], [0:0:1] that is
/// a smooth point.
std::optional<ProjPoint> default_base_point(const PlaneCubic& c);

GameEquivalence game_equivalence(const PayoffTables& X1, const PayoffTables& X2);

}  // namespace spohn
