#include "spohn/spohn_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spohn/error.hpp"

namespace spohn {

namespace {

MultiPoly quadric(const std::array<Rational, 4>& coefs, const std::array<std::pair<int, int>, 4>& pairs) {
  MultiPoly q(joint_vars());
  for (std::size_t k = 0; k < 4; ++k) {
    Exponents e(4, 0);
    e[static_cast<std::size_t>(pairs[k].first)] += 1;
    e[static_cast<std::size_t>(pairs[k].second)] += 1;
    q.add_term(e, coefs[k]);
  }
  return q;
}

bool constant_table(const Matrix2& M) {
  return M[0][0] == M[0][1] && M[0][0] == M[1][0] && M[0][0] == M[1][1];
}

}  // namespace

SpohnQuadrics build_quadrics(const PayoffTables& X) {
  const auto& A = X.A;
  const auto& B = X.B;
  SpohnQuadrics q;
  q.q1 = quadric({A[1][0] - A[0][0], A[1][1] - A[0][0], A[1][0] - A[0][1], A[1][1] - A[0][1]},
                 {{{0, 2}, {0, 3}, {1, 2}, {1, 3}}});
  q.q2 = quadric({B[0][1] - B[0][0], B[1][1] - B[0][0], B[0][1] - B[1][0], B[1][1] - B[1][0]},
                 {{{0, 1}, {0, 3}, {1, 2}, {2, 3}}});
  return q;
}

SpohnCubic build_cubic(const PayoffTables& X) {
  const Rational &a11 = X.A[0][0], &a12 = X.A[0][1], &a21 = X.A[1][0], &a22 = X.A[1][1];
  const Rational &b11 = X.B[0][0], &b12 = X.B[0][1], &b21 = X.B[1][0], &b22 = X.B[1][1];
  SpohnCubic s;
  s.c = {
      (a11 - a22) * (b11 - b12),
      (a11 - a21) * (b22 - b11),
      (a12 - a22) * (b11 - b12),
      (a11 - a21) * (b22 - b21),
      (a12 - a22) * (b21 - b12),
      (a12 - a21) * (b22 - b21),
      (a12 - a21) * (b22 - b11) + (a11 - a22) * (b21 - b12),
  };
  static const std::array<Exponents, 7> monomials{
      Exponents{2, 1, 0}, Exponents{2, 0, 1}, Exponents{1, 2, 0}, Exponents{1, 0, 2},
      Exponents{0, 2, 1}, Exponents{0, 1, 2}, Exponents{1, 1, 1}};
  s.f = MultiPoly(plane_vars());
  for (std::size_t k = 0; k < 7; ++k) s.f.add_term(monomials[k], s.c[k]);
  return s;
}

std::array<Rational, 7> spohn_coefficients(const MultiPoly& f) {
  if (f.num_vars() != 3) throw DomainError("expected a polynomial in three variables");
  for (std::size_t v = 0; v < 3; ++v) {
    Exponents cube(3, 0);
    cube[v] = 3;
    if (!f.coefficient(cube).is_zero()) throw DomainError("cubic has a pure cube term: " + f.str());
  }
  if (!f.is_zero() && (f.degree() != 3 || !f.is_homogeneous())) {
    throw DomainError("expected a homogeneous cubic: " + f.str());
  }
  return {f.coefficient({2, 1, 0}), f.coefficient({2, 0, 1}), f.coefficient({1, 2, 0}), f.coefficient({1, 0, 2}),
          f.coefficient({0, 2, 1}), f.coefficient({0, 1, 2}), f.coefficient({1, 1, 1})};
}

std::optional<int> zero_cubic_classify(const PayoffTables& X) {
  const Rational &a11 = X.A[0][0], &a12 = X.A[0][1], &a21 = X.A[1][0], &a22 = X.A[1][1];
  const Rational &b11 = X.B[0][0], &b12 = X.B[0][1], &b21 = X.B[1][0], &b22 = X.B[1][1];
  if (constant_table(X.A) || constant_table(X.B)) return 1;
  if (a11 == a21 && a12 == a22 && b11 == b12 && b21 == b22) return 2;
  if (a11 == a12 && a12 == a22 && b11 == b21 && b21 == b22) return 3;
  if (a11 == a12 && a12 == a21 && b11 == b12 && b12 == b21) return 4;
  return std::nullopt;
}

std::vector<int> classify_cases(const PayoffTables& X) {
  const Rational &a11 = X.A[0][0], &a12 = X.A[0][1], &a21 = X.A[1][0], &a22 = X.A[1][1];
  const Rational &b11 = X.B[0][0], &b12 = X.B[0][1], &b21 = X.B[1][0], &b22 = X.B[1][1];
  auto zero = [](std::initializer_list<Rational> exprs) {
    return std::all_of(exprs.begin(), exprs.end(), [](const Rational& e) { return e.is_zero(); });
  };
  const std::array<bool, 12> holds{
      a11 == a12,
      a11 == a21,
      a21 == a22,
      b11 == b12,
      b11 == b21,
      b12 == b22,
      a12 == a22 && b21 == b22,
      a12 == a21 && b12 == b21,
      zero({a12 * (b12 - b22) + a21 * (b22 - b21) + a22 * (b21 - b12),
            a11 * (b22 - b12) + a21 * (b11 - b22) + a22 * (b12 - b11),
            a11 * (b22 - b21) + a12 * (b11 - b22) + a22 * (b21 - b11)}),
      zero({a11 * (b12 - b21) + a12 * (b21 - b22) + a21 * (b22 - b12),
            a12 * (b11 - b21) + a21 * (b12 - b11) + a22 * (b21 - b12),
            a11 * (b11 - b21) + a21 * (b22 - b11) + a22 * (b21 - b22)}),
      zero({a12 * (b22 - b21) + a21 * (b12 - b22) + a22 * (b21 - b12),
            a11 * (b22 - b21) + a21 * (b11 - b22) + a22 * (b21 - b11),
            a11 * (b22 - b12) + a12 * (b11 - b22) + a22 * (b12 - b11)}),
      zero({a11 * (b12 - b21) + a12 * (b22 - b12) + a21 * (b21 - b22),
            a12 * (b11 - b12) + a21 * (b21 - b11) + a22 * (b12 - b21),
            a11 * (b11 - b21) + a12 * (b22 - b12) + a21 * (b21 - b11) + a22 * (b12 - b22)}),
  };
  std::vector<int> out;
  for (std::size_t k = 0; k < holds.size(); ++k) {
    if (holds[k]) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

bool w_membership(const JointDistribution& p) {
  return p.row1().is_zero() || p.row2().is_zero() || p.col1().is_zero() || p.col2().is_zero();
}

bool variety_membership(const SpohnQuadrics& q, const ProjPoint& p) {
  if (p.dim() != 4) throw DomainError("variety membership needs a point of P^3");
  return q.q1.evaluate(p.coords()).is_zero() && q.q2.evaluate(p.coords()).is_zero();
}

std::vector<std::array<double, 4>> sample_curve_points(const PayoffTables& X, int draws, std::uint64_t seed) {
  constexpr double kMaxCoordinate = 10.0;
  const auto s = build_cubic(X);
  std::array<double, 7> c{};
  for (std::size_t k = 0; k < 7; ++k) c[k] = s.c[k].to_double();
  auto d = [](const Rational& v) { return v.to_double(); };
  const double a11 = d(X.A[0][0]), a12 = d(X.A[0][1]), a21 = d(X.A[1][0]), a22 = d(X.A[1][1]);
  const double b11 = d(X.B[0][0]), b12 = d(X.B[0][1]), b21 = d(X.B[1][0]), b22 = d(X.B[1][1]);

  auto q1 = [&](const std::array<double, 4>& p) {
    return (a21 - a11) * p[0] * p[2] + (a22 - a11) * p[0] * p[3] + (a21 - a12) * p[1] * p[2] +
           (a22 - a12) * p[1] * p[3];
  };
  auto q2 = [&](const std::array<double, 4>& p) {
    return (b12 - b11) * p[0] * p[1] + (b22 - b11) * p[0] * p[3] + (b12 - b21) * p[1] * p[2] +
           (b22 - b21) * p[2] * p[3];
  };

  // Minimum-norm Newton steps on (q1, q2, sum - 1) in extended precision.
  auto polish = [&](std::array<double, 4>& pd) {
    using LD = long double;
    std::array<LD, 4> p{pd[0], pd[1], pd[2], pd[3]};
    const std::array<LD, 4> ga{LD(a21 - a11), LD(a22 - a11), LD(a21 - a12), LD(a22 - a12)};
    const std::array<LD, 4> gb{LD(b12 - b11), LD(b22 - b11), LD(b12 - b21), LD(b22 - b21)};
    for (int it = 0; it < 4; ++it) {
      const std::array<LD, 3> F{ga[0] * p[0] * p[2] + ga[1] * p[0] * p[3] + ga[2] * p[1] * p[2] + ga[3] * p[1] * p[3],
                                gb[0] * p[0] * p[1] + gb[1] * p[0] * p[3] + gb[2] * p[1] * p[2] + gb[3] * p[2] * p[3],
                                p[0] + p[1] + p[2] + p[3] - 1};
      const std::array<std::array<LD, 4>, 3> J{{
          {ga[0] * p[2] + ga[1] * p[3], ga[2] * p[2] + ga[3] * p[3], ga[0] * p[0] + ga[2] * p[1], ga[1] * p[0] + ga[3] * p[1]},
          {gb[0] * p[1] + gb[1] * p[3], gb[0] * p[0] + gb[2] * p[2], gb[2] * p[1] + gb[3] * p[3], gb[1] * p[0] + gb[3] * p[2]},
          {1, 1, 1, 1},
      }};
      std::array<std::array<LD, 4>, 3> G{};  // [J J^T | -F]
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
          for (std::size_t m = 0; m < 4; ++m) G[i][k] += J[i][m] * J[k][m];
        }
        G[i][3] = -F[i];
      }
      for (std::size_t col = 0; col < 3; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < 3; ++i) {
          if (std::abs(G[i][col]) > std::abs(G[piv][col])) piv = i;
        }
        if (std::abs(G[piv][col]) < 1e-30L) return;
        std::swap(G[col], G[piv]);
        for (std::size_t i = 0; i < 3; ++i) {
          if (i == col) continue;
          const LD f = G[i][col] / G[col][col];
          for (std::size_t k = col; k < 4; ++k) G[i][k] -= f * G[col][k];
        }
      }
      for (std::size_t m = 0; m < 4; ++m) {
        LD step = 0;
        for (std::size_t i = 0; i < 3; ++i) step += J[i][m] * G[i][3] / G[i][i];
        p[m] += step;
      }
    }
    for (std::size_t m = 0; m < 4; ++m) pd[m] = static_cast<double>(p[m]);
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::array<double, 4>> out;
  for (int n = 0; n < draws; ++n) {
    const double x = unit(rng);
    const double y = unit(rng);
    // f(x, y, z) as a quadratic in z
    const double alpha = c[3] * x + c[5] * y;
    const double beta = c[1] * x * x + c[4] * y * y + c[6] * x * y;
    const double gamma = c[0] * x * x * y + c[2] * x * y * y;
    std::vector<double> roots;
    const double scale = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma), 1e-300});
    if (std::abs(alpha) <= 1e-14 * scale) {
      if (std::abs(beta) > 1e-14 * scale) roots.push_back(-gamma / beta);
    } else {
      const double disc = beta * beta - 4 * alpha * gamma;
      if (disc < 0) continue;
      const double sq = std::sqrt(disc);
      const double qv = -0.5 * (beta + std::copysign(sq, beta));
      if (qv != 0) {
        roots.push_back(qv / alpha);
        roots.push_back(gamma / qv);
      } else {
        roots.push_back(0.0);
      }
    }
    for (double z : roots) {
      const double L1 = (a22 - a11) * x + (a22 - a12) * y;
      const double M1 = (a21 - a11) * x * z + (a21 - a12) * y * z;
      const double L2 = (b22 - b11) * x + (b22 - b21) * z;
      const double M2 = (b12 - b11) * x * y + (b12 - b21) * y * z;
      double t;
      if (std::abs(L1) >= std::abs(L2)) {
        if (L1 == 0) continue;
        t = -M1 / L1;
      } else {
        t = -M2 / L2;
      }
      std::array<double, 4> p{x, y, z, t};
      const double sum = x + y + z + t;
      if (std::abs(sum) < 1e-12) continue;
      for (double& v : p) v /= sum;
      // large coordinates mean the sum nearly cancelled; such points are ill-conditioned
      if (std::any_of(p.begin(), p.end(), [](double v) { return std::abs(v) > kMaxCoordinate; })) continue;
      polish(p);
      if (std::abs(q1(p)) < 1e-8 && std::abs(q2(p)) < 1e-8) out.push_back(p);
    }
  }
  return out;
}

std::string to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Line:
      return "line";
    case ComponentKind::Conic:
      return "conic";
    case ComponentKind::Cubic:
      return "cubic";
  }
  return "unknown";
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::ZeroCubic:
      return "ZeroCubic";
    case VerdictKind::Irreducible:
      return "Irreducible";
    case VerdictKind::Reducible:
      return "Reducible";
  }
  return "unknown";
}

}  // namespace spohn
