#ifndef DEFCALC_DEFORMED_CALCULUS_HPP
#define DEFCALC_DEFORMED_CALCULUS_HPP

#include <vector>

#include "defcalc/rat_func.hpp"
#include "defcalc/report.hpp"

namespace defcalc {

/// Polynomial in one variable x with RatFunc coefficients, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<RatFunc> coefficients);
  static UniPoly monomial(int degree, RatFunc coefficient = RatFunc(1));

  const std::vector<RatFunc>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  RatFunc coefficient(int k) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const RatFunc& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// f(a x + b).
  UniPoly compose_linear(const RatFunc& a, const RatFunc& b) const;

  /// "c0 + c1*x + ..." with parenthesized coefficients.
  std::string to_string() const;
  Json to_json() const;

 private:
  void trim();
  std::vector<RatFunc> coeffs_;
};

/// x' = scale * x + shift.
struct ShiftMap {
  RatFunc scale;
  RatFunc shift;

  ShiftMap(RatFunc scale, RatFunc shift);
  static ShiftMap q_shift(RatFunc q = RatFunc::symbol("q"));
  static ShiftMap eta_shift(RatFunc eta = RatFunc::symbol("eta"));
  static ShiftMap q_eta_shift(RatFunc q = RatFunc::symbol("q"), RatFunc eta = RatFunc::symbol("eta"));

  Json to_json() const;
};

/// (f(x') - f(x)) / (x' - x), by exact division.
UniPoly apply_difference_operator(const UniPoly& f, const ShiftMap& s);

/// d(fg) = (df) g + f(x') dg.
CheckReport check_leibniz(const UniPoly& f, const UniPoly& g, const ShiftMap& s);

}  // namespace defcalc

#endif  // DEFCALC_DEFORMED_CALCULUS_HPP
