#include "defcalc/rat_func.hpp"

#include <algorithm>

#include "defcalc/errors.hpp"
#include "defcalc/sampler.hpp"

namespace defcalc {

namespace {

using Factor = RatFunc::Factor;

// den = scale * prod(factors). Monomial content is split into single-variable
// factors and the rest is made monic.
std::pair<Rational, std::vector<Factor>> normalize_denominator(const SparsePoly& den) {
  std::vector<Factor> factors;
  if (den.is_constant()) return {den.constant_term(), factors};
  const auto& vars = den.vars();
  Exponents low = den.terms().front().first;
  for (const auto& [e, c] : den.terms()) {
    for (std::size_t k = 0; k < low.size(); ++k) low[k] = std::min(low[k], e[k]);
  }
  SparsePoly rest = den;
  for (std::size_t k = 0; k < low.size(); ++k) {
    if (low[k] == 0) continue;
    SparsePoly x = SparsePoly::variable(vars[k]);
    rest = *rest.divide_exact(x.pow(static_cast<unsigned>(low[k])));
    factors.emplace_back(std::move(x), low[k]);
  }
  const Rational scale = rest.leading_coefficient();
  if (!rest.is_constant()) factors.emplace_back(rest.scaled(Rational(1) / scale), 1);
  return {scale, factors};
}

void sort_factors(std::vector<Factor>& list) {
  std::sort(list.begin(), list.end(), [](const Factor& a, const Factor& b) { return compare(a.first, b.first) < 0; });
}

std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b, bool lcm) {
  std::vector<Factor> out = a;
  for (const auto& [f, m] : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Factor& x) { return x.first == f; });
    if (it == out.end()) {
      out.emplace_back(f, m);
    } else {
      it->second = lcm ? std::max(it->second, m) : it->second + m;
    }
  }
  sort_factors(out);
  return out;
}

int multiplicity(const std::vector<Factor>& list, const SparsePoly& f) {
  for (const auto& [g, m] : list) {
    if (g == f) return m;
  }
  return 0;
}

SparsePoly expand(const std::vector<Factor>& list) {
  SparsePoly p(Rational(1));
  for (const auto& [f, m] : list) p = p * f.pow(static_cast<unsigned>(m));
  return p;
}

// Removes from `list` every factor power that divides `poly`, dividing it out.
void cancel_into(std::vector<Factor>& list, SparsePoly& poly) {
  if (poly.is_zero()) {
    list.clear();
    return;
  }
  for (auto& [f, m] : list) {
    while (m > 0) {
      auto q = poly.divide_exact(f);
      if (!q) break;
      poly = std::move(*q);
      --m;
    }
  }
  std::erase_if(list, [](const Factor& x) { return x.second == 0; });
}

// Substitutes into a polynomial by Horner's rule in `var`.
RatFunc substitute_poly(const SparsePoly& p, std::string_view var, const RatFunc& value) {
  if (!p.depends_on(var)) return RatFunc(p);
  if (value.is_polynomial()) {
    auto coeffs = p.coefficients_in(var);
    SparsePoly r;
    for (std::size_t k = coeffs.size(); k-- > 0;) r = r * value.numerator() + coeffs[k];
    return RatFunc(r);
  }
  auto coeffs = p.coefficients_in(var);
  RatFunc r;
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * value + RatFunc(coeffs[k]);
  return r;
}

}  // namespace

RatFunc::RatFunc(SparsePoly numerator, const SparsePoly& denominator) : num_(std::move(numerator)) {
  if (denominator.is_zero()) throw DivisionByZero();
  auto [scale, factors] = normalize_denominator(denominator);
  num_ = num_.scaled(Rational(1) / scale);
  den_ = std::move(factors);
  sort_factors(den_);
  cancel();
}

void RatFunc::cancel() { cancel_into(den_, num_); }

SparsePoly RatFunc::denominator() const { return expand(den_); }

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw InvalidArgument("rational function " + to_string() + " is not a constant");
  return num_.constant_term();
}

bool RatFunc::depends_on(std::string_view var) const {
  if (num_.depends_on(var)) return true;
  return std::any_of(den_.begin(), den_.end(), [&](const Factor& f) { return f.first.depends_on(var); });
}

std::set<std::string, SymbolLess> RatFunc::variables() const {
  std::set<std::string, SymbolLess> out(num_.vars().begin(), num_.vars().end());
  for (const auto& [f, m] : den_) out.insert(f.vars().begin(), f.vars().end());
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.den_ = merge_factors(a.den_, b.den_, true);
    SparsePoly sa = a.num_, sb = b.num_;
    for (const auto& [f, m] : r.den_) {
      const int ka = m - multiplicity(a.den_, f);
      const int kb = m - multiplicity(b.den_, f);
      if (ka > 0) sa = sa * f.pow(static_cast<unsigned>(ka));
      if (kb > 0) sb = sb * f.pow(static_cast<unsigned>(kb));
    }
    r.num_ = sa + sb;
  }
  r.cancel();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) {
    RatFunc r = b;
    r.num_ = r.num_.scaled(a.num_.constant_term());
    return r;
  }
  if (b.is_constant()) {
    RatFunc r = a;
    r.num_ = r.num_.scaled(b.num_.constant_term());
    return r;
  }
  std::vector<Factor> da = a.den_, db = b.den_;
  SparsePoly na = a.num_, nb = b.num_;
  cancel_into(da, nb);
  cancel_into(db, na);
  RatFunc r;
  r.num_ = na * nb;
  r.den_ = merge_factors(da, db, false);
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_constant()) return a * RatFunc(Rational(1) / b.num_.constant_term());
  RatFunc inverse(expand(b.den_), b.num_);
  return a * inverse;
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) return RatFunc(1) / pow(-exponent);
  RatFunc r(1);
  for (int k = 0; k < exponent; ++k) r = r * *this;
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

bool equal_exact(const RatFunc& a, const RatFunc& b) { return a == b; }

RatFunc derivative(const RatFunc& f, std::string_view var) {
  SparsePoly dnum = derivative(f.num_, var);
  std::vector<std::size_t> moving;
  for (std::size_t k = 0; k < f.den_.size(); ++k) {
    if (f.den_[k].first.depends_on(var)) moving.push_back(k);
  }
  if (moving.empty()) {
    RatFunc r;
    r.num_ = std::move(dnum);
    r.den_ = f.den_;
    r.cancel();
    return r;
  }
  // (N/prod f_i^m_i)' = (N' prod_S f_i - N sum_S m_i f_i' prod_{S\i} f_j) / prod f_i^(m_i + [i in S])
  SparsePoly all(Rational(1));
  for (std::size_t k : moving) all = all * f.den_[k].first;
  SparsePoly num = dnum * all;
  for (std::size_t k : moving) {
    SparsePoly others(Rational(1));
    for (std::size_t j : moving) {
      if (j != k) others = others * f.den_[j].first;
    }
    num = num - (f.num_ * derivative(f.den_[k].first, var) * others).scaled(Rational(f.den_[k].second));
  }
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = f.den_;
  for (std::size_t k : moving) r.den_[k].second += 1;
  r.cancel();
  return r;
}

RatFunc substitute(const RatFunc& f, std::string_view var, const RatFunc& value) {
  if (!f.depends_on(var)) return f;
  RatFunc num = substitute_poly(f.num_, var, value);
  RatFunc den(1);
  for (const auto& [g, m] : f.den_) {
    RatFunc gs = substitute_poly(g, var, value);
    if (gs.is_zero()) throw PoleAtPoint("substitution " + std::string(var) + " -> " + value.to_string() +
                                        " annihilates denominator factor " + g.to_string());
    den = den * gs.pow(m);
  }
  return num / den;
}

RatFunc limit(const RatFunc& f, std::string_view var, const Rational& value) {
  if (f.is_zero()) return f;
  const SparsePoly t = SparsePoly::variable(std::string(var)) - SparsePoly(value);
  auto strip = [&](SparsePoly p, int& count) {
    while (!p.is_zero() && p.substitute(var, value).is_zero()) {
      auto q = p.divide_exact(t);
      if (!q) throw InexactDivision("vanishing polynomial not divisible by " + t.to_string());
      p = std::move(*q);
      ++count;
    }
    return p;
  };
  int num_order = 0, den_order = 0;
  SparsePoly num = strip(f.num_, num_order).substitute(var, value);
  RatFunc den(1);
  for (const auto& [g, m] : f.den_) {
    int order = 0;
    SparsePoly gs = strip(g, order).substitute(var, value);
    den_order += order * m;
    den = den * RatFunc(gs).pow(m);
  }
  if (den_order > num_order) {
    throw PoleAtPoint("pole of order " + std::to_string(den_order - num_order) + " at " + std::string(var) + " = " +
                      value.to_string());
  }
  if (den_order < num_order) return {};
  return RatFunc(num) / den;
}

Rational evaluate(const SparsePoly& p, const Assignment& point) { return p.evaluate(point); }

Rational evaluate(const RatFunc& f, const Assignment& point) {
  Rational den(1);
  for (const auto& [g, m] : f.den_) {
    Rational v = g.evaluate(point);
    if (v.is_zero()) throw PoleAtPoint("denominator factor " + g.to_string() + " vanishes at the point");
    den *= v.pow(m);
  }
  return f.num_.evaluate(point) / den;
}

bool equal_probabilistic(const RatFunc& a, const RatFunc& b, std::uint64_t seed, int trials) {
  if (trials < 1) throw InvalidArgument("probabilistic equality needs at least one trial");
  auto vars = a.variables();
  auto vb = b.variables();
  vars.insert(vb.begin(), vb.end());
  PointSampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    bool sampled = false;
    for (int attempt = 0; attempt < 100 && !sampled; ++attempt) {
      const Assignment point = sampler.sample(vars);
      try {
        if (evaluate(a, point) != evaluate(b, point)) return false;
        sampled = true;
      } catch (const PoleAtPoint&) {
      }
    }
    if (!sampled) throw DegenerateSample();
  }
  return true;
}

namespace {

// Scale that turns p into a primitive integer polynomial.
Rational content_scale(const SparsePoly& p) {
  mpz_class l = 1, g = 0;
  for (const auto& [e, c] : p.terms()) l = lcm(l, c.denominator());
  for (const auto& [e, c] : p.terms()) g = gcd(g, mpz_class(c.numerator() * (l / c.denominator())));
  return Rational(mpq_class(l, g));
}

}  // namespace

// Printed with a primitive integer denominator; internally it stays monic.
std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  const Rational s = content_scale(denominator());
  const SparsePoly den = denominator().scaled(s);
  const SparsePoly numer = num_.scaled(s);
  if (den.is_constant()) return RatFunc(numer.scaled(Rational(1) / den.constant_term())).to_string();
  std::string n = numer.to_string();
  if (numer.size() > 1) n = "(" + n + ")";
  std::string d = den.to_string();
  if (den.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

nlohmann::ordered_json RatFunc::to_json() const {
  return {{"text", to_string()}, {"numerator", num_.to_json()}, {"denominator", denominator().to_json()}};
}

}  // namespace defcalc
