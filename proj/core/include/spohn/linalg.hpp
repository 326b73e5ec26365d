#pragma once

#include <vector>

#include "spohn/rational.hpp"

namespace spohn {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);
int rank(RationalMatrix m);

/// Basis of the right null space {v : m v = 0}.
std::vector<std::vector<Rational>> kernel(RationalMatrix m);

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace spohn
