#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spohn/game.hpp"
#include "spohn/multipoly.hpp"
#include "spohn/proj_point.hpp"

namespace spohn {

inline const std::vector<std::string>& joint_vars() {
  static const std::vector<std::string> v{"p11", "p12", "p21", "p22"};
  return v;
}

inline const std::vector<std::string>& plane_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

struct SpohnQuadrics {
  MultiPoly q1;
  MultiPoly q2;
};

struct SpohnCubic {
  std::array<Rational, 7> c;
  MultiPoly f;  // in (x, y, z) = (p11, p12, p21)
};

SpohnQuadrics build_quadrics(const PayoffTables& X);
SpohnCubic build_cubic(const PayoffTables& X);

/// Spohn-shape coefficients c1..c7 read off a cubic without pure cubes.
std::array<Rational, 7> spohn_coefficients(const MultiPoly& f);

/// First matching condition 1..4 under which the cubic vanishes identically.
std::optional<int> zero_cubic_classify(const PayoffTables& X);

/// Matching reducibility cases among 1..12, ascending.
std::vector<int> classify_cases(const PayoffTables& X);

enum class ComponentKind { Line, Conic, Cubic };
std::string to_string(ComponentKind k);

struct CurveComponent {
  ComponentKind kind;
  MultiPoly poly;
  int multiplicity = 1;
  std::optional<ProjPoint> point;
};

struct Decomposition {
  std::vector<CurveComponent> components;
  Rational scalar;  // f = scalar * prod(component^multiplicity)
  bool has_line() const;
};

/// Splits a nonzero ternary cubic without pure cube terms into lines, conics
/// irreducible over Q, or itself if irreducible.
Decomposition decompose_cubic(const MultiPoly& f);

enum class VerdictKind { ZeroCubic, Irreducible, Reducible };
std::string to_string(VerdictKind k);

struct ReducibilityVerdict {
  VerdictKind kind;
  std::optional<int> zero_condition;
  std::vector<int> cases;
  std::vector<CurveComponent> components;
};

/// Zero test, case classification and decomposition with smooth points.
ReducibilityVerdict analyze_cubic(const PayoffTables& X);

/// Rational point on the component at which its gradient is nonzero.
ProjPoint smooth_rational_point(const CurveComponent& component);

bool w_membership(const JointDistribution& p);
bool variety_membership(const SpohnQuadrics& q, const ProjPoint& p);

/// Float points of the Spohn variety normalized to unit sum, from `draws`
/// random slices. Points are Newton-polished, have coordinates of magnitude at
/// most 10 and satisfy both quadrics to 1e-8.
std::vector<std::array<double, 4>> sample_curve_points(const PayoffTables& X, int draws, std::uint64_t seed);

}  // namespace spohn
