#include <algorithm>
#include <stdexcept>

#include "spohn/elliptic.hpp"
#include "spohn/error.hpp"
#include "spohn/spohn_geometry.hpp"

namespace spohn {

Rational WeierstrassCurve::b2() const { return a1 * a1 + Rational(4) * a2; }
Rational WeierstrassCurve::b4() const { return Rational(2) * a4 + a1 * a3; }
Rational WeierstrassCurve::b6() const { return a3 * a3 + Rational(4) * a6; }
Rational WeierstrassCurve::b8() const {
  return a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
Rational WeierstrassCurve::c4() const { return b2() * b2() - Rational(24) * b4(); }
Rational WeierstrassCurve::c6() const {
  return -b2().pow(3) + Rational(36) * b2() * b4() - Rational(216) * b6();
}
Rational WeierstrassCurve::discriminant() const {
  const Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - Rational(8) * B4.pow(3) - Rational(27) * B6 * B6 + Rational(9) * B2 * B4 * B6;
}
JResult WeierstrassCurve::j() const {
  const Rational d = discriminant();
  if (d.is_zero()) return {};
  return {c4().pow(3) / d};
}

WeierstrassCurve WeierstrassCurve::short_form(const Rational& A, const Rational& B) {
  return WeierstrassCurve{0, 0, 0, A, B};
}

WeierstrassCurve weierstrass_from_cubic(const PlaneCubic& c, const ProjPoint& pt) {
  if (pt.dim() != 3) throw DomainError("base point must lie in P^2");
  const MultiPoly F = c.poly();
  if (!F.evaluate(pt.coords()).is_zero()) throw DomainError("base point " + pt.str() + " is not on the cubic");
  const JResult target = j_invariant(c);
  if (target.singular()) throw DomainError("cubic is singular (discriminant 0)");
  const auto g = gradient(F, pt);
  const auto k = static_cast<std::size_t>(
      std::find_if(g.begin(), g.end(), [](const Rational& x) { return !x.is_zero(); }) - g.begin());
  if (k == 3) throw DomainError("base point " + pt.str() + " is a singular point of the cubic");

  // Columns: m1 on the tangent line, m2 off it, m3 the base point.
  const auto& P = pt.coords();
  std::vector<Rational> m1;
  for (const auto& v : kernel({g})) {
    const auto cr = cross(v, P);
    if (std::any_of(cr.begin(), cr.end(), [](const Rational& x) { return !x.is_zero(); })) {
      m1 = v;
      break;
    }
  }
  std::vector<Rational> m2(3);
  m2[k] = 1;

  const auto& vars = plane_vars();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::array<Rational, 3> row{m1[i], m2[i], P[i]};
    images.push_back(linear_form(vars, row));
  }
  // G = y z^2 + q(x, y) z + c(x, y)
  const MultiPoly G = F.compose(images) * g[k].inverse();
  if (!G.coefficient({0, 0, 3}).is_zero() || !G.coefficient({1, 0, 2}).is_zero() ||
      G.coefficient({0, 1, 2}) != Rational(1)) {
    throw std::logic_error("tangent normalization failed");
  }
  const Rational qxx = G.coefficient({2, 0, 1}), qxy = G.coefficient({1, 1, 1}), qyy = G.coefficient({0, 2, 1});
  const Rational c30 = G.coefficient({3, 0, 0}), c21 = G.coefficient({2, 1, 0});
  const Rational c12 = G.coefficient({1, 2, 0}), c03 = G.coefficient({0, 3, 0});

  WeierstrassCurve E;
  if (qxx.is_zero()) {
    // base point is a flex, the tangent is the line at infinity
    const Rational A = -c30;
    E = {qxy, -c21, qyy * A, -c12 * A, -c03 * A * A};
  } else {
    // D(t) = q(1,t)^2 - 4 t c(1,t) = e4 t^4 + e3 t^3 + e2 t^2 + e1 t + qxx^2
    const Rational e4 = qyy * qyy - Rational(4) * c03;
    const Rational e3 = Rational(2) * qxy * qyy - Rational(4) * c12;
    const Rational e2 = qxy * qxy + Rational(2) * qxx * qyy - Rational(4) * c21;
    const Rational e1 = Rational(2) * qxx * qxy - Rational(4) * c30;
    const Rational q2 = qxx * qxx;
    E.a1 = e1 / qxx;
    E.a2 = e2 - e1 * e1 / (Rational(4) * q2);
    E.a3 = Rational(2) * qxx * e3;
    E.a4 = Rational(-4) * q2 * e4;
    E.a6 = E.a2 * E.a4;
  }
  const JResult j = E.j();
  if (j.singular() || *j.value != *target.value) throw std::logic_error("Weierstrass model does not match the cubic's j");
  return E;
}

bool q_isomorphic(const WeierstrassCurve& E1, const WeierstrassCurve& E2) {
  const auto j1 = E1.j();
  const auto j2 = E2.j();
  if (j1.singular() || j2.singular()) throw DomainError("q_isomorphic needs nonsingular curves");
  if (*j1.value != *j2.value) return false;
  const Rational c4 = E1.c4(), c6 = E1.c6(), d4 = E2.c4(), d6 = E2.c6();
  if (c4.is_zero()) return (d6 / c6).exact_root(6).has_value();
  if (c6.is_zero()) return (d4 / c4).exact_root(4).has_value();
  const Rational u2 = (d6 / c6) / (d4 / c4);
  if (!u2.is_square()) return false;
  return d4 == u2 * u2 * c4 && d6 == u2.pow(3) * c6;
}

}  // namespace spohn
