#include "spohn/serialize.hpp"

#include "spohn/error.hpp"

namespace spohn {

namespace {

json rationals(const auto& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v);
  return arr;
}

json doubles(const auto& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void require_array(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(what + " must be an array of length " + std::to_string(n));
  }
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }

void to_json(json& j, const MultiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exp", it->first}, {"coef", it->second}});
  }
  j = {{"vars", p.vars()}, {"terms", terms}};
}

void to_json(json& j, const ProjPoint& p) { j = rationals(p.coords()); }

void to_json(json& j, const PayoffTables& X) {
  auto table = [](const Matrix2& M) { return json{rationals(M[0]), rationals(M[1])}; };
  j = {{"A", table(X.A)}, {"B", table(X.B)}};
}

void to_json(json& j, const MixedProfile& s) { j = {{"q", s.q}, {"r", s.r}}; }

void to_json(json& j, const CurveComponent& c) {
  j = {{"kind", to_string(c.kind)}, {"poly", c.poly}, {"text", c.poly.str()}, {"multiplicity", c.multiplicity}};
  j["point"] = c.point ? json(*c.point) : json(nullptr);
}

void to_json(json& j, const ReducibilityVerdict& v) {
  j = {{"kind", to_string(v.kind)}, {"cases", v.cases}, {"components", v.components}};
  j["zero_condition"] = v.zero_condition ? json(*v.zero_condition) : json(nullptr);
}

void to_json(json& j, const PlaneCubic& c) {
  static const char* const names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "m"};
  json coefs = json::object();
  for (std::size_t k = 0; k < 10; ++k) coefs[names[k]] = c.coef[k];
  j = {{"coefficients", coefs}, {"poly", c.poly()}, {"text", c.poly().str()}};
}

void to_json(json& j, const AronholdInvariants& inv) {
  j = {{"S", inv.S}, {"T", inv.T}, {"discriminant", inv.discriminant}};
}

void to_json(json& j, const JResult& r) { j = r.str(); }

void to_json(json& j, const WeierstrassCurve& E) {
  j = {{"a", json{E.a1, E.a2, E.a3, E.a4, E.a6}},
       {"c4", E.c4()},
       {"c6", E.c6()},
       {"discriminant", E.discriminant()},
       {"j", E.j()}};
}

void to_json(json& j, const ContinuedFraction& cf) {
  json pq = json::array();
  for (const auto& a : cf.partial_quotients) {
    if (a.fits_slong_p()) {
      pq.push_back(a.get_si());
    } else {
      pq.push_back(a.get_str());
    }
  }
  j = {{"approx", cf.best()}, {"partial_quotients", pq}, {"convergents", rationals(cf.convergents)}};
}

void to_json(json& j, const KonstanzMatrix& k) {
  json rows = json::array();
  for (const auto& row : k.entries) rows.push_back(rationals(row));
  j = {{"pi1", k.pi1}, {"pi2", k.pi2}, {"matrix", rows}, {"determinant", k.determinant}};
}

void to_json(json& j, const EpsSeries& s) { j = s.str(); }

void to_json(json& j, const LimitReport& r) {
  json ladder = json::array();
  for (const auto& step : r.ladder) {
    std::array<double, 4> p{}, e{};
    for (std::size_t k = 0; k < 4; ++k) {
      p[k] = step.p[k].to_double();
      e[k] = step.payoffs[k].to_double();
    }
    ladder.push_back({{"r", step.r}, {"p", doubles(p)}, {"payoffs", doubles(e)}});
  }
  j = {{"numeric", true},
       {"ladder", ladder},
       {"limits", doubles(r.limits)},
       {"marginal_limits", rationals(r.marginal_limits)},
       {"inequalities_hold", r.inequalities_hold},
       {"failures", r.failures}};
}

void to_json(json& j, const NeWitness& w) {
  j = {{"numeric", true},
       {"case", w.case_label},
       {"sequence", json(w.sequence)},
       {"threshold", w.threshold},
       {"report", w.report}};
}

void to_json(json& j, const CooperationWitness& w) {
  j = {{"numeric", true},
       {"lambda", w.lambda},
       {"sequence", json(w.sequence)},
       {"targets", rationals(w.targets)},
       {"report", w.report},
       {"raw_inequalities_hold", w.raw_inequalities_hold},
       {"limits_match", w.limits_match},
       {"gaps_monotone", w.gaps_monotone},
       {"ok", w.ok()}};
}

void to_json(json& j, const ParetoReport& r) {
  json points = json::array();
  for (const auto& p : r.dominating) {
    points.push_back({{"p", doubles(p.p)}, {"payoffs", json{p.pi1, p.pi2}}});
  }
  j = {{"numeric", true},
       {"reference", r.reference},
       {"ne_distribution", doubles(r.ne_distribution)},
       {"ne_payoffs", json{r.ne_pi1, r.ne_pi2}},
       {"samples", r.samples},
       {"dominating_points", points}};
}

void to_json(json& j, const GameEquivalence& e) {
  j = {{"j1", e.j1}, {"j2", e.j2}, {"same_j", e.same_j}};
  j["fully_equivalent"] = e.fully_equivalent ? json(*e.fully_equivalent) : json("undetermined");
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return Rational::parse(j.dump());
  throw ParseError("expected a rational as a string or number, got " + j.dump());
}

MultiPoly poly_from_json(const json& j, const std::vector<std::string>& default_vars) {
  if (j.is_string()) return MultiPoly::parse(j.get<std::string>(), default_vars);
  if (!j.is_object()) throw ParseError("polynomial must be a string or an object with vars and terms");
  std::vector<std::string> vars = default_vars;
  if (j.contains("vars")) {
    if (!j.at("vars").is_array()) throw ParseError("polynomial vars must be an array of names");
    vars.clear();
    for (const auto& v : j.at("vars")) {
      if (!v.is_string()) throw ParseError("polynomial vars must be an array of names");
      vars.push_back(v.get<std::string>());
    }
  }
  MultiPoly p(vars);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("polynomial terms must be an array");
  for (const auto& t : terms) {
    const json& exp = field(t, "exp");
    require_array(exp, vars.size(), "term exponent");
    Exponents e;
    for (const auto& x : exp) {
      if (!x.is_number_integer() || x.get<int>() < 0) throw ParseError("exponents must be nonnegative integers");
      e.push_back(x.get<int>());
    }
    p.add_term(e, rational_from_json(field(t, "coef")));
  }
  return p;
}

ProjPoint point_from_json(const json& j) {
  if (!j.is_array() || (j.size() != 3 && j.size() != 4)) throw ParseError("point must be an array of 3 or 4 rationals");
  std::vector<Rational> coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x));
  if (std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r.is_zero(); })) {
    throw ParseError("point coordinates must not all be zero");
  }
  return ProjPoint(coords);
}

RationalMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  require_array(j, rows, "matrix");
  RationalMatrix m;
  for (const auto& row : j) {
    require_array(row, cols, "matrix row");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    m.push_back(std::move(r));
  }
  return m;
}

PayoffTables game_from_json(const json& j) {
  auto table = [&](const char* key) {
    const auto m = matrix_from_json(field(j, key), 2, 2);
    return Matrix2{{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
  };
  return PayoffTables{table("A"), table("B")};
}

JointDistribution distribution_from_json(const json& j) {
  require_array(j, 4, "distribution");
  return JointDistribution::make(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                                 rational_from_json(j[3]));
}

MixedProfile profile_from_json(const json& j) {
  if (j.is_array()) {
    require_array(j, 2, "mixed profile");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  }
  return {rational_from_json(field(j, "q")), rational_from_json(field(j, "r"))};
}

QuadricPair quadric_pair_from_json(const json& j) {
  const ProjPoint point = point_from_json(field(j, "point"));
  if (j.contains("P1")) {
    auto p1 = poly_from_json(field(j, "P1"), space_vars());
    auto p2 = poly_from_json(field(j, "P2"), space_vars());
    if (p1.vars() != space_vars() || p2.vars() != space_vars()) {
      throw ParseError("quadrics must use the variables x, y, z, t");
    }
    return QuadricPair(std::move(p1), std::move(p2), point);
  }
  return QuadricPair::from_matrices(matrix_from_json(field(j, "A"), 4, 4), matrix_from_json(field(j, "B"), 4, 4),
                                    point);
}

WeierstrassCurve weierstrass_from_json(const json& j) {
  if (j.contains("a")) {
    const json& a = j.at("a");
    require_array(a, 5, "Weierstrass coefficients [a1, a2, a3, a4, a6]");
    return {rational_from_json(a[0]), rational_from_json(a[1]), rational_from_json(a[2]), rational_from_json(a[3]),
            rational_from_json(a[4])};
  }
  return WeierstrassCurve::short_form(rational_from_json(field(j, "A")), rational_from_json(field(j, "B")));
}

}  // namespace spohn
