#include "spohn/elliptic.hpp"

#include <algorithm>

#include "spohn/error.hpp"
#include "spohn/spohn_geometry.hpp"

namespace spohn {

namespace {

struct InvariantTerm {
  int coef;
  int exps[10];
};

#include "aronhold_tables.inc"

template <std::size_t N>
Rational evaluate_terms(const InvariantTerm (&terms)[N], const std::array<Rational, 10>& v) {
  std::array<std::array<Rational, 7>, 10> powers;
  for (std::size_t k = 0; k < 10; ++k) {
    powers[k][0] = Rational(1);
    for (std::size_t e = 1; e < 7; ++e) powers[k][e] = powers[k][e - 1] * v[k];
  }
  Rational sum;
  for (const auto& term : terms) {
    Rational t(term.coef);
    for (std::size_t k = 0; k < 10 && !t.is_zero(); ++k) {
      if (term.exps[k] != 0) t *= powers[k][static_cast<std::size_t>(term.exps[k])];
    }
    sum += t;
  }
  return sum;
}

void require_quadric(const MultiPoly& p, const char* name) {
  if (p.vars() != space_vars()) throw DomainError(std::string(name) + " must be a polynomial in x, y, z, t");
  if (!p.is_zero() && (p.degree() != 2 || !p.is_homogeneous())) {
    throw DomainError(std::string(name) + " is not a homogeneous quadric: " + p.str());
  }
}

MultiPoly drop_t(const MultiPoly& p) {
  MultiPoly out(plane_vars());
  for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1], e[2]}, c);
  return out;
}

// Monomial exponent layout of the ten cubic coefficients and their multipliers.
const std::array<std::pair<Exponents, int>, 10>& cubic_layout() {
  static const std::array<std::pair<Exponents, int>, 10> layout{{
      {{3, 0, 0}, 1},
      {{0, 3, 0}, 1},
      {{0, 0, 3}, 1},
      {{2, 1, 0}, 3},
      {{0, 2, 1}, 3},
      {{1, 0, 2}, 3},
      {{1, 2, 0}, 3},
      {{0, 1, 2}, 3},
      {{2, 0, 1}, 3},
      {{1, 1, 1}, 6},
  }};
  return layout;
}

}  // namespace

QuadricPair::QuadricPair(MultiPoly p1, MultiPoly p2, ProjPoint pt)
    : P1(std::move(p1)), P2(std::move(p2)), point(std::move(pt)) {
  require_quadric(P1, "P1");
  require_quadric(P2, "P2");
  if (point.dim() != 4) throw DomainError("common point must lie in P^3");
}

QuadricPair QuadricPair::from_matrices(const RationalMatrix& A, const RationalMatrix& B, ProjPoint pt) {
  auto to_poly = [](const RationalMatrix& M, const char* name) {
    if (M.size() != 4) throw DomainError(std::string(name) + " must be a 4x4 matrix");
    MultiPoly p(space_vars());
    for (std::size_t i = 0; i < 4; ++i) {
      if (M[i].size() != 4) throw DomainError(std::string(name) + " must be a 4x4 matrix");
      for (std::size_t j = 0; j < 4; ++j) {
        Exponents e(4, 0);
        e[i] += 1;
        e[j] += 1;
        p.add_term(e, M[i][j]);
      }
    }
    return p;
  };
  return QuadricPair(to_poly(A, "A"), to_poly(B, "B"), std::move(pt));
}

QuadricPair QuadricPair::from_game(const PayoffTables& X) {
  const auto q = build_quadrics(X);
  return QuadricPair(q.q1.renamed(space_vars()), q.q2.renamed(space_vars()), ProjPoint{0, 0, 0, 1});
}

TranslatedPair translate_to_infinity(const QuadricPair& qp) {
  if (!qp.P1.evaluate(qp.point.coords()).is_zero() || !qp.P2.evaluate(qp.point.coords()).is_zero()) {
    throw DomainError("point " + qp.point.str() + " is not on both quadrics");
  }
  std::vector<Rational> pt = qp.point.coords();
  MultiPoly P1 = qp.P1;
  MultiPoly P2 = qp.P2;
  RationalMatrix Q(4, std::vector<Rational>(4));
  for (std::size_t i = 0; i < 4; ++i) Q[i][i] = 1;

  std::optional<std::size_t> swapped;
  if (pt[3].is_zero()) {
    std::size_t k = 0;
    while (pt[k].is_zero()) ++k;
    std::vector<MultiPoly> images;
    for (const auto& v : space_vars()) images.push_back(MultiPoly::variable(space_vars(), v));
    std::swap(images[k], images[3]);
    P1 = P1.compose(images);
    P2 = P2.compose(images);
    std::swap(pt[k], pt[3]);
    std::swap(Q[k], Q[3]);
    swapped = k;
  }
  const Rational t0 = pt[3];
  for (auto& v : pt) v /= t0;

  std::vector<MultiPoly> images;
  const MultiPoly t = MultiPoly::variable(space_vars(), "t");
  for (std::size_t i = 0; i < 3; ++i) images.push_back(MultiPoly::variable(space_vars(), space_vars()[i]) + pt[i] * t);
  images.push_back(t);
  RationalMatrix shift(4, std::vector<Rational>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    shift[i][i] = 1;
    shift[i][3] = pt[i];
  }
  shift[3][3] = 1;
  return {QuadricPair(P1.compose(images), P2.compose(images), ProjPoint{0, 0, 0, 1}), swapped, mat_mul(Q, shift)};
}

KLM split_klm(const QuadricPair& qp) {
  const Exponents t2{0, 0, 0, 2};
  if (!qp.P1.coefficient(t2).is_zero() || !qp.P2.coefficient(t2).is_zero()) {
    throw DomainError("nonzero t^2 coefficient: [0:0:0:1] is not a common point");
  }
  KLM k{drop_t(qp.P1.coefficient_of(3, 1)), drop_t(qp.P1.coefficient_of(3, 0)), drop_t(qp.P2.coefficient_of(3, 1)),
        drop_t(qp.P2.coefficient_of(3, 0))};
  const auto l1 = linear_coefficients(k.L1);
  const auto l2 = linear_coefficients(k.L2);
  const auto cr = cross(l1, l2);
  if (std::all_of(cr.begin(), cr.end(), [](const Rational& x) { return x.is_zero(); })) {
    throw DomainError("L1 and L2 are linearly dependent, the intersection degenerates to genus 0");
  }
  return k;
}

PlaneCubic PlaneCubic::from_poly(const MultiPoly& f) {
  if (f.num_vars() != 3) throw DomainError("plane cubic needs three variables");
  if (!f.is_zero() && (f.degree() != 3 || !f.is_homogeneous())) {
    throw DomainError("not a homogeneous cubic: " + f.str());
  }
  PlaneCubic c;
  const auto& layout = cubic_layout();
  for (std::size_t k = 0; k < 10; ++k) c.coef[k] = f.coefficient(layout[k].first) / Rational(layout[k].second);
  return c;
}

MultiPoly PlaneCubic::poly() const {
  MultiPoly f(plane_vars());
  const auto& layout = cubic_layout();
  for (std::size_t k = 0; k < 10; ++k) f.add_term(layout[k].first, coef[k] * Rational(layout[k].second));
  return f;
}

PlaneCubic PlaneCubic::scaled(const Rational& lambda) const {
  PlaneCubic c = *this;
  for (auto& v : c.coef) v *= lambda;
  return c;
}

PlaneCubic cubic_from_quadrics(const QuadricPair& qp) {
  const auto moved = translate_to_infinity(qp);
  const auto k = split_klm(moved.pair);
  return PlaneCubic::from_poly(k.L1 * k.M2 - k.L2 * k.M1);
}

AronholdInvariants aronhold(const PlaneCubic& c) {
  AronholdInvariants inv;
  inv.S = evaluate_terms(kSTerms, c.coef);
  inv.T = evaluate_terms(kTTerms, c.coef);
  inv.discriminant = (Rational(64) * inv.S.pow(3) - inv.T.pow(2)) / Rational(1728);
  return inv;
}

JResult j_invariant(const PlaneCubic& c) {
  const auto inv = aronhold(c);
  if (inv.discriminant.is_zero()) return {};
  return {Rational(64) * inv.S.pow(3) / inv.discriminant};
}

PlaneCubic spohn_plane_cubic(const PayoffTables& X) { return PlaneCubic::from_poly(build_cubic(X).f); }

std::optional<ProjPoint> default_base_point(const PlaneCubic& c) {
  const MultiPoly f = c.poly();
  for (const ProjPoint& p : {ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}}) {
    if (!f.evaluate(p.coords()).is_zero()) continue;
    const auto g = gradient(f, p);
    if (std::any_of(g.begin(), g.end(), [](const Rational& x) { return !x.is_zero(); })) return p;
  }
  return std::nullopt;
}

GameEquivalence game_equivalence(const PayoffTables& X1, const PayoffTables& X2) {
  auto nonsingular = [](const PayoffTables& X, int which) {
    const PlaneCubic c = spohn_plane_cubic(X);
    const auto j = j_invariant(c);
    if (j.singular()) {
      std::string cases;
      for (int k : classify_cases(X)) cases += (cases.empty() ? "" : ",") + std::to_string(k);
      throw DomainError("Spohn cubic of game " + std::to_string(which) + " is singular (reducibility cases: " +
                        (cases.empty() ? "none" : cases) + ")");
    }
    return std::make_pair(c, *j.value);
  };
  const auto [c1, j1] = nonsingular(X1, 1);
  const auto [c2, j2] = nonsingular(X2, 2);
  GameEquivalence out{j1, j2, j1 == j2, std::nullopt};
  const auto p1 = default_base_point(c1);
  const auto p2 = default_base_point(c2);
  if (p1 && p2) {
    out.fully_equivalent = out.same_j && q_isomorphic(weierstrass_from_cubic(c1, *p1), weierstrass_from_cubic(c2, *p2));
  }
  return out;
}

}  // namespace spohn
