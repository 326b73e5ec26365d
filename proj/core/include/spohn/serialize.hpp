#pragma once

#include <nlohmann/json.hpp>

#include "spohn/contfrac.hpp"
#include "spohn/elliptic.hpp"
#include "spohn/game.hpp"
#include "spohn/multipoly.hpp"
#include "spohn/proj_point.hpp"
#include "spohn/rational.hpp"
#include "spohn/spohn_geometry.hpp"

namespace spohn {

using nlohmann::json;

void to_json(json& j, const Rational& r);
void to_json(json& j, const MultiPoly& p);
void to_json(json& j, const ProjPoint& p);
void to_json(json& j, const PayoffTables& X);
void to_json(json& j, const MixedProfile& s);
void to_json(json& j, const CurveComponent& c);
void to_json(json& j, const ReducibilityVerdict& v);
void to_json(json& j, const PlaneCubic& c);
void to_json(json& j, const AronholdInvariants& inv);
void to_json(json& j, const JResult& r);
void to_json(json& j, const WeierstrassCurve& E);
void to_json(json& j, const ContinuedFraction& cf);
void to_json(json& j, const KonstanzMatrix& k);
void to_json(json& j, const EpsSeries& s);
void to_json(json& j, const LimitReport& r);
void to_json(json& j, const NeWitness& w);
void to_json(json& j, const CooperationWitness& w);
void to_json(json& j, const ParetoReport& r);
void to_json(json& j, const GameEquivalence& e);

// Readers throw ParseError on malformed input. Rationals may be given as
// strings ("3/4", "-1.5") or JSON integers.
Rational rational_from_json(const json& j);
MultiPoly poly_from_json(const json& j, const std::vector<std::string>& default_vars);
ProjPoint point_from_json(const json& j);
PayoffTables game_from_json(const json& j);
JointDistribution distribution_from_json(const json& j);
MixedProfile profile_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
/// {"P1", "P2", "point"} with polynomial values, or {"A", "B", "point"} with 4x4 matrices.
QuadricPair quadric_pair_from_json(const json& j);
/// {"a": [a1, a2, a3, a4, a6]} or {"A": .., "B": ..} for y^2 = x^3 + A x + B.
WeierstrassCurve weierstrass_from_json(const json& j);

}  // namespace spohn
