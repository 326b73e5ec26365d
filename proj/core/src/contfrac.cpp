#include "spohn/contfrac.hpp"

#include <string>

#include "spohn/error.hpp"

namespace spohn {

ContinuedFraction contfrac_expand(const Rational& value, int n) {
  if (n < 1) throw DomainError("number of convergents must be at least 1");
  ContinuedFraction cf;
  BigInt h_prev = 1, h_prev2 = 0;
  BigInt k_prev = 0, k_prev2 = 1;
  Rational x = value;
  for (int i = 0; i < n; ++i) {
    const BigInt a = x.floor();
    cf.partial_quotients.push_back(a);
    const BigInt h = a * h_prev + h_prev2;
    const BigInt k = a * k_prev + k_prev2;
    cf.convergents.emplace_back(h, k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const Rational frac = x - Rational(a, 1);
    if (frac.is_zero()) break;
    x = frac.inverse();
  }
  return cf;
}

ContinuedFraction contfrac_approx(std::string_view value, int n) {
  std::string text(value);
  for (const std::string_view tail : {"...", "\xE2\x80\xA6"}) {
    if (text.size() >= tail.size() && text.compare(text.size() - tail.size(), tail.size(), tail) == 0) {
      text.erase(text.size() - tail.size());
    }
  }
  return contfrac_expand(Rational::parse(text), n);
}

}  // namespace spohn
