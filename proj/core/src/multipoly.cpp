#include "spohn/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "spohn/error.hpp"
#include "spohn/proj_point.hpp"

namespace spohn {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& value) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.num_vars(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::string_view name) {
  MultiPoly p(std::move(vars));
  Exponents e(p.num_vars(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, const Rational& coef) {
  MultiPoly p(std::move(vars));
  p.add_term(exps, coef);
  return p;
}

std::size_t MultiPoly::var_index(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw DomainError("variable '" + std::string(name) + "' not in polynomial ring");
  return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coef) {
  if (exps.size() != vars_.size()) throw DomainError("exponent vector length does not match variable count");
  if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; })) {
    throw DomainError("negative exponent");
  }
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw DomainError("evaluation point has wrong dimension");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= point[i].pow(e[i]);
    }
    sum += t;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != vars_.size()) throw DomainError("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw DomainError("derivative variable out of range");
  MultiPoly d(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    d.add_term(f, c * Rational(e[var]));
  }
  return d;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size()) throw DomainError("compose needs one image per variable");
  if (images.empty()) return *this;
  const auto& target_vars = images.front().vars();
  for (const auto& im : images) {
    if (im.vars() != target_vars) throw DomainError("compose images must share a variable list");
  }
  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  MultiPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t = t * power(i, e[i]);
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::renamed(std::vector<std::string> vars) const {
  if (vars.size() != vars_.size()) throw DomainError("rename must keep the number of variables");
  MultiPoly p(std::move(vars));
  p.terms_ = terms_;
  return p;
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, int power) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != power) continue;
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

void MultiPoly::require_same_vars(const MultiPoly& o, const char* op) const {
  if (vars_ != o.vars_) throw DomainError(std::string("mismatched variable lists in polynomial ") + op);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(o, "addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(o, "subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b, "multiplication");
  MultiPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative polynomial power");
  MultiPoly out = constant(vars_, Rational(1));
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string text, const std::vector<std::string>& vars) : text_(std::move(text)), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly out(vars_);
    skip_space();
    if (pos_ == text_.size()) throw error("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      auto [exps, coef] = term();
      out.add_term(exps, sign < 0 ? -coef : coef);
      skip_space();
    }
    return out;
  }

 private:
  std::pair<Exponents, Rational> term() {
    Exponents exps(vars_.size(), 0);
    Rational coef(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coef = number();
      any = true;
    }
    while (true) {
      skip_space();
      const std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_space();
      }
      const auto var = match_var();
      if (!var) {
        pos_ = save;
        break;
      }
      int power = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw error("expected exponent after '^'");
        power = std::stoi(text_.substr(start, pos_ - start));
      }
      exps[*var] += power;
      any = true;
    }
    if (!any) throw error("expected a coefficient or variable");
    return {exps, coef};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  std::optional<std::size_t> match_var() {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.size() > best_len && text_.compare(pos_, v.size(), v) == 0) {
        best = i;
        best_len = v.size();
      }
    }
    if (best) pos_ += best_len;
    return best;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  ParseError error(const std::string& what) const {
    return ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" + text_ + "'");
  }

  std::string text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string normalize_minus(std::string_view text) {
  // accept the Unicode minus sign U+2212
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> vars) {
  return PolyParser(normalize_minus(text), vars).parse();
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add:
      return p + q;
    case PolyOp::Sub:
      return p - q;
    case PolyOp::Mul:
      return p * q;
  }
  throw DomainError("unknown polynomial operation");
}

MultiPoly substitute_linear(const MultiPoly& p, std::string_view var, const MultiPoly& replacement) {
  const std::size_t idx = p.var_index(var);
  if (replacement.vars() != p.vars()) throw DomainError("replacement must use the polynomial's variables");
  if (replacement.degree() > 1) throw DomainError("replacement must have degree at most 1");
  std::vector<MultiPoly> images;
  for (const auto& v : p.vars()) images.push_back(MultiPoly::variable(p.vars(), v));
  images[idx] = replacement;
  return p.compose(images);
}

MultiPoly divide_by_linear(const MultiPoly& p, const MultiPoly& line) {
  if (line.vars() != p.vars()) throw DomainError("mismatched variable lists in division");
  if (line.degree() != 1 || !line.is_homogeneous()) throw DomainError("divisor must be a nonzero homogeneous linear form");
  const auto coeffs = linear_coefficients(line);
  const auto lead_it = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return !c.is_zero(); });
  const auto v = static_cast<std::size_t>(lead_it - coeffs.begin());
  const Rational lead_inv = lead_it->inverse();

  MultiPoly rest = p;
  MultiPoly quotient(p.vars());
  while (!rest.is_zero()) {
    // lex order with v as the most significant variable
    auto top = std::max_element(rest.terms().begin(), rest.terms().end(), [v](const auto& a, const auto& b) {
      if (a.first[v] != b.first[v]) return a.first[v] < b.first[v];
      return a.first < b.first;
    });
    if (top->first[v] == 0) {
      throw DomainError("linear form " + line.str() + " does not divide " + p.str());
    }
    Exponents e = top->first;
    e[v] -= 1;
    const MultiPoly step = MultiPoly::monomial(p.vars(), e, top->second * lead_inv);
    quotient += step;
    rest -= step * line;
  }
  if (quotient * line != p) throw DomainError("division check failed");
  return quotient;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c.is_zero(); });
}

BinaryForm restrict_to_line(const MultiPoly& p, const ProjPoint& p1, const ProjPoint& p2) {
  if (p1 == p2) throw DomainError("restrict_to_line needs two distinct points");
  if (p1.dim() != p.num_vars() || p2.dim() != p.num_vars()) throw DomainError("point dimension does not match polynomial");
  if (!p.is_homogeneous()) throw DomainError("restrict_to_line needs a homogeneous polynomial");
  const std::vector<std::string> st{"s", "t"};
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    MultiPoly im(st);
    im.add_term({1, 0}, p1[i]);
    im.add_term({0, 1}, p2[i]);
    images.push_back(std::move(im));
  }
  const MultiPoly restricted = p.compose(images);
  const int d = std::max(p.degree(), 0);
  BinaryForm form;
  for (int k = 0; k <= d; ++k) form.coefficients.push_back(restricted.coefficient({d - k, k}));
  return form;
}

std::vector<Rational> gradient(const MultiPoly& p, const ProjPoint& at) {
  if (at.dim() != p.num_vars()) throw DomainError("point dimension does not match polynomial");
  std::vector<Rational> g;
  for (std::size_t i = 0; i < p.num_vars(); ++i) g.push_back(p.derivative(i).evaluate(at.coords()));
  return g;
}

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.vars() != q.vars() || p.is_zero() || q.is_zero() || p.num_terms() != q.num_terms()) return false;
  const Rational ratio = q.terms().begin()->second / p.terms().begin()->second;
  return p * ratio == q;
}

MultiPoly linear_form(std::vector<std::string> vars, std::span<const Rational> coefficients) {
  if (coefficients.size() != vars.size()) throw DomainError("linear form coefficient count mismatch");
  MultiPoly out(std::move(vars));
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    Exponents e(coefficients.size(), 0);
    e[i] = 1;
    out.add_term(e, coefficients[i]);
  }
  return out;
}

std::vector<Rational> linear_coefficients(const MultiPoly& line) {
  if (line.degree() > 1 || !line.is_homogeneous()) throw DomainError("not a homogeneous linear form: " + line.str());
  std::vector<Rational> out(line.num_vars());
  for (const auto& [e, c] : line.terms()) {
    const auto it = std::find(e.begin(), e.end(), 1);
    out[static_cast<std::size_t>(it - e.begin())] = c;
  }
  return out;
}

}  // namespace spohn
