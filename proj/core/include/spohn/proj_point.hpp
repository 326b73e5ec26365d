#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "spohn/rational.hpp"

namespace spohn {

/// Point of P^2 or P^3 over Q, stored with its first nonzero coordinate
/// scaled to 1 so that equality is equality of projective points.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Rational> coords);
  ProjPoint(std::initializer_list<Rational> coords) : ProjPoint(std::vector<Rational>(coords)) {}

  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// Representative with integer coordinates and content 1.
  std::vector<BigInt> primitive() const;

  std::string str() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Cross product of two vectors of length 3 (line through two points, or
/// intersection point of two lines).
std::vector<Rational> cross(const std::vector<Rational>& u, const std::vector<Rational>& v);

}  // namespace spohn
