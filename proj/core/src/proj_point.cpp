#include "spohn/proj_point.hpp"

#include <algorithm>

#include "spohn/error.hpp"

namespace spohn {

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.size() != 3 && coords_.size() != 4) {
    throw DomainError("projective points must have 3 or 4 coordinates");
  }
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return !c.is_zero(); });
  if (lead == coords_.end()) throw DomainError("projective point with all coordinates zero");
  const Rational scale = lead->inverse();
  for (auto& c : coords_) c *= scale;
}

std::vector<BigInt> ProjPoint::primitive() const {
  BigInt l = 1;
  for (const auto& c : coords_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& c : coords_) {
    BigInt v = c.numerator() * (l / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  for (auto& v : out) v /= g;
  return out;
}

std::string ProjPoint::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ":";
    s += coords_[i].str();
  }
  return s + "]";
}

std::vector<Rational> cross(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  if (u.size() != 3 || v.size() != 3) throw DomainError("cross product needs 3-vectors");
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace spohn
