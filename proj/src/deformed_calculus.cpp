#include "defcalc/deformed_calculus.hpp"

#include <algorithm>

#include "defcalc/errors.hpp"

namespace defcalc {

UniPoly::UniPoly(std::vector<RatFunc> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(int degree, RatFunc coefficient) {
  std::vector<RatFunc> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coefficient);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFunc UniPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<RatFunc> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + RatFunc(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatFunc> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const RatFunc& c, const UniPoly& a) {
  std::vector<RatFunc> out = a.coeffs_;
  for (auto& x : out) x = c * x;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::compose_linear(const RatFunc& a, const RatFunc& b) const {
  const UniPoly lin({b, a});
  UniPoly r;
  for (std::size_t k = coeffs_.size(); k-- > 0;) r = r * lin + UniPoly({coeffs_[k]});
  return r;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = coeffs_[k].to_string();
    if (k > 0 && c.find_first_of("+-/*", 1) != std::string::npos) c = "(" + c + ")";
    if (k == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

Json UniPoly::to_json() const {
  Json c = Json::array();
  for (const auto& x : coeffs_) c.push_back(x.to_string());
  return {{"text", to_string()}, {"coefficients", c}};
}

ShiftMap::ShiftMap(RatFunc scale_, RatFunc shift_) : scale(std::move(scale_)), shift(std::move(shift_)) {
  if (scale == RatFunc(1) && shift.is_zero()) {
    throw InvalidArgument("shift map x' = x has a vanishing difference denominator");
  }
}

ShiftMap ShiftMap::q_shift(RatFunc q) { return {std::move(q), RatFunc(0)}; }
ShiftMap ShiftMap::eta_shift(RatFunc eta) { return {RatFunc(1), std::move(eta)}; }
ShiftMap ShiftMap::q_eta_shift(RatFunc q, RatFunc eta) { return {std::move(q), std::move(eta)}; }

Json ShiftMap::to_json() const { return {{"scale", scale.to_string()}, {"shift", shift.to_string()}}; }

UniPoly apply_difference_operator(const UniPoly& f, const ShiftMap& s) {
  // Synthetic division of f(x') - f(x) by d1 x + d0.
  const UniPoly diff = f.compose_linear(s.scale, s.shift) - f;
  const RatFunc d1 = s.scale - RatFunc(1);
  const RatFunc& d0 = s.shift;
  if (diff.is_zero()) return {};
  if (d1.is_zero()) return (RatFunc(1) / d0) * diff;

  std::vector<RatFunc> rem = diff.coefficients();
  std::vector<RatFunc> quot(rem.size() - 1);
  for (std::size_t k = rem.size(); k-- > 1;) {
    const RatFunc c = rem[k] / d1;
    quot[k - 1] = c;
    rem[k - 1] -= c * d0;
  }
  if (!rem[0].is_zero()) {
    throw InexactDivision("difference quotient left remainder " + rem[0].to_string());
  }
  return UniPoly(std::move(quot));
}

CheckReport check_leibniz(const UniPoly& f, const UniPoly& g, const ShiftMap& s) {
  const UniPoly lhs = apply_difference_operator(f * g, s);
  const UniPoly rhs =
      apply_difference_operator(f, s) * g + f.compose_linear(s.scale, s.shift) * apply_difference_operator(g, s);
  Json params{{"f", f.to_string()}, {"g", g.to_string()}, {"shift_map", s.to_json()}};
  const bool ok = lhs == rhs;
  Json witness = ok ? Json{{"derivative", lhs.to_string()}}
                    : Json{{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"difference", (lhs - rhs).to_string()}};
  return make_report("deformed_calculus.leibniz", std::move(params), ok, std::move(witness));
}

}  // namespace defcalc
