#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spohn/error.hpp"
#include "spohn/linalg.hpp"
#include "spohn/spohn_geometry.hpp"

namespace spohn {

namespace {

// Integer coefficients with content 1 and a positive leading coefficient.
MultiPoly normalized(const MultiPoly& p) {
  BigInt den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    den = lcm(den, c.denominator());
    num = gcd(num, c.numerator());
  }
  Rational scale(den, num);
  if (p.terms().rbegin()->second.sign() < 0) scale = -scale;
  return p * scale;
}

const std::vector<ProjPoint>& coordinate_points() {
  static const std::vector<ProjPoint> pts{ProjPoint{0, 1, 0}, ProjPoint{1, 0, 0}, ProjPoint{0, 0, 1}};
  return pts;
}

std::optional<MultiPoly> find_line(const MultiPoly& f) {
  for (std::size_t v = 0; v < 3; ++v) {
    const bool divides = std::all_of(f.terms().begin(), f.terms().end(), [v](const auto& t) { return t.first[v] > 0; });
    if (divides) return MultiPoly::variable(plane_vars(), plane_vars()[v]);
  }
  const auto c = spohn_coefficients(f);
  auto add = [](std::vector<ProjPoint>& set, std::vector<Rational> coords) {
    ProjPoint p(std::move(coords));
    if (std::find(set.begin(), set.end(), p) == set.end()) set.push_back(p);
  };
  std::vector<ProjPoint> x1, x23;
  add(x1, {0, 0, 1});
  add(x1, {0, 1, 0});
  add(x1, {0, c[5], -c[4]});
  add(x23, {0, 0, 1});
  add(x23, {1, 0, 0});
  add(x23, {c[3], 0, -c[1]});
  add(x23, {0, 1, 0});
  add(x23, {c[2], -c[0], 0});
  for (const auto& p : x1) {
    for (const auto& q : x23) {
      if (p == q) continue;
      if (restrict_to_line(f, p, q).is_zero()) {
        return linear_form(plane_vars(), cross(p.coords(), q.coords()));
      }
    }
  }
  return std::nullopt;
}

RationalMatrix conic_matrix(const MultiPoly& g) {
  RationalMatrix S(3, std::vector<Rational>(3));
  for (const auto& [e, c] : g.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < 3; ++v) {
      for (int k = 0; k < e[v]; ++k) idx.push_back(v);
    }
    if (idx[0] == idx[1]) {
      S[idx[0]][idx[0]] = c;
    } else {
      S[idx[0]][idx[1]] = c / Rational(2);
      S[idx[1]][idx[0]] = c / Rational(2);
    }
  }
  return S;
}

std::vector<CurveComponent> split_conic(const MultiPoly& g) {
  const auto S = conic_matrix(g);
  const int rk = rank(S);
  if (rk == 3) return {{ComponentKind::Conic, normalized(g), 1, std::nullopt}};
  if (rk == 1) {
    const auto row = std::find_if(S.begin(), S.end(), [](const auto& r) {
      return std::any_of(r.begin(), r.end(), [](const Rational& x) { return !x.is_zero(); });
    });
    return {{ComponentKind::Line, normalized(linear_form(plane_vars(), *row)), 2, std::nullopt}};
  }
  // Two lines through the singular point, rational iff the restriction to a
  // line avoiding that point has a square discriminant.
  const auto ker = kernel(S).front();
  const ProjPoint P(ker);
  std::size_t k = 0;
  while (P[k].is_zero()) ++k;
  std::array<std::size_t, 2> others{};
  for (std::size_t v = 0, n = 0; v < 3; ++v) {
    if (v != k) others[n++] = v;
  }
  std::vector<Rational> e1(3), e2(3);
  e1[others[0]] = 1;
  e2[others[1]] = 1;
  const auto form = restrict_to_line(g, ProjPoint(e1), ProjPoint(e2)).coefficients;
  const Rational &a = form[0], &b = form[1], &c = form[2];
  const Rational disc = b * b - Rational(4) * a * c;
  const auto root = disc.exact_root(2);
  if (!root) return {{ComponentKind::Conic, normalized(g), 1, std::nullopt}};
  std::vector<std::pair<Rational, Rational>> st;
  if (!a.is_zero()) {
    st = {{-b + *root, Rational(2) * a}, {-b - *root, Rational(2) * a}};
  } else {
    st = {{Rational(1), Rational(0)}, {c, -b}};
  }
  std::vector<CurveComponent> out;
  for (const auto& [s, t] : st) {
    std::vector<Rational> q(3);
    q[others[0]] = s;
    q[others[1]] = t;
    out.push_back({ComponentKind::Line, normalized(linear_form(plane_vars(), cross(P.coords(), q))), 1, std::nullopt});
  }
  return out;
}

bool smooth_at(const MultiPoly& g, const ProjPoint& p) {
  if (!g.evaluate(p.coords()).is_zero()) return false;
  const auto grad = gradient(g, p);
  return std::any_of(grad.begin(), grad.end(), [](const Rational& x) { return !x.is_zero(); });
}

std::optional<ProjPoint> search_conic(const MultiPoly& g) {
  constexpr int kHeight = 100;
  for (std::size_t k = 0; k < 3; ++k) {
    const MultiPoly c2 = g.coefficient_of(k, 2);
    const MultiPoly c1 = g.coefficient_of(k, 1);
    const MultiPoly c0 = g.coefficient_of(k, 0);
    std::array<std::size_t, 2> others{};
    for (std::size_t v = 0, n = 0; v < 3; ++v) {
      if (v != k) others[n++] = v;
    }
    for (int u = 0; u <= kHeight; ++u) {
      for (int w = -kHeight; w <= kHeight; ++w) {
        if (u == 0 && w <= 0) continue;
        std::vector<Rational> pt(3);
        pt[others[0]] = u;
        pt[others[1]] = w;
        const Rational A = c2.evaluate(pt), B = c1.evaluate(pt), C = c0.evaluate(pt);
        std::vector<Rational> roots;
        if (A.is_zero()) {
          if (!B.is_zero()) roots.push_back(-C / B);
          else if (C.is_zero()) roots.push_back(Rational(0));
        } else if (const auto r = (B * B - Rational(4) * A * C).exact_root(2)) {
          roots.push_back((-B + *r) / (Rational(2) * A));
          roots.push_back((-B - *r) / (Rational(2) * A));
        }
        for (const auto& z : roots) {
          pt[k] = z;
          const ProjPoint p(pt);
          if (smooth_at(g, p)) return p;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool Decomposition::has_line() const {
  return std::any_of(components.begin(), components.end(),
                     [](const CurveComponent& c) { return c.kind == ComponentKind::Line; });
}

Decomposition decompose_cubic(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("cannot decompose the zero cubic");
  if (f.vars() != plane_vars()) throw DomainError("cubic must be a polynomial in x, y, z");
  spohn_coefficients(f);

  std::vector<CurveComponent> found;
  if (const auto line = find_line(f)) {
    found.push_back({ComponentKind::Line, normalized(*line), 1, std::nullopt});
    for (auto& c : split_conic(divide_by_linear(f, *line))) found.push_back(std::move(c));
  } else {
    found.push_back({ComponentKind::Cubic, normalized(f), 1, std::nullopt});
  }

  Decomposition d;
  for (auto& c : found) {
    auto same = std::find_if(d.components.begin(), d.components.end(),
                             [&](const CurveComponent& o) { return o.poly == c.poly; });
    if (same != d.components.end()) {
      same->multiplicity += c.multiplicity;
    } else {
      d.components.push_back(std::move(c));
    }
  }
  std::stable_sort(d.components.begin(), d.components.end(), [](const auto& a, const auto& b) {
    const int da = a.poly.degree(), db = b.poly.degree();
    return da != db ? da < db : a.poly.str() < b.poly.str();
  });

  MultiPoly product = MultiPoly::constant(plane_vars(), Rational(1));
  for (const auto& c : d.components) product = product * c.poly.pow(c.multiplicity);
  d.scalar = f.terms().rbegin()->second / product.terms().rbegin()->second;
  if (product * d.scalar != f) throw std::logic_error("decomposition does not reproduce the cubic");
  return d;
}

ProjPoint smooth_rational_point(const CurveComponent& component) {
  const MultiPoly& g = component.poly;
  if (g.is_zero()) throw DomainError("component polynomial is zero");
  if (component.kind == ComponentKind::Line) {
    const auto abc = linear_coefficients(g);
    const ProjPoint p = (abc[0].is_zero() && abc[1].is_zero()) ? ProjPoint{1, 0, 0} : ProjPoint{abc[1], -abc[0], 0};
    return p;
  }
  for (const auto& p : coordinate_points()) {
    if (smooth_at(g, p)) return p;
  }
  if (component.kind == ComponentKind::Conic) {
    if (auto p = search_conic(g)) return *p;
  }
  throw DomainError("no smooth rational point found on " + g.str() + " within the search budget");
}

ReducibilityVerdict analyze_cubic(const PayoffTables& X) {
  ReducibilityVerdict v;
  v.zero_condition = zero_cubic_classify(X);
  v.cases = classify_cases(X);
  const auto cubic = build_cubic(X);
  if (cubic.f.is_zero()) {
    v.kind = VerdictKind::ZeroCubic;
    return v;
  }
  auto d = decompose_cubic(cubic.f);
  for (auto& c : d.components) {
    if (c.kind == ComponentKind::Cubic) {
      try {
        c.point = smooth_rational_point(c);
      } catch (const DomainError&) {
        c.point.reset();
      }
    } else {
      c.point = smooth_rational_point(c);
    }
  }
  v.kind = d.has_line() ? VerdictKind::Reducible : VerdictKind::Irreducible;
  v.components = std::move(d.components);
  return v;
}

}  // namespace spohn
