#pragma once

#include <string_view>
#include <vector>

#include "spohn/rational.hpp"

namespace spohn {

struct ContinuedFraction {
  std::vector<BigInt> partial_quotients;
  std::vector<Rational> convergents;

  const Rational& best() const { return convergents.back(); }
};

/// First `n` partial quotients of an exact rational, fewer if the expansion
/// terminates earlier.
ContinuedFraction contfrac_expand(const Rational& value, int n);

/// Parses `value` as an exact decimal (a trailing "..." is ignored) and
/// expands it.
ContinuedFraction contfrac_approx(std::string_view value, int n);

}  // namespace spohn
