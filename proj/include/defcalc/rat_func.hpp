#ifndef DEFCALC_RAT_FUNC_HPP
#define DEFCALC_RAT_FUNC_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "defcalc/sparse_poly.hpp"

namespace defcalc {

/// Rational function over named symbols.
///
/// The denominator is held as a sorted list of distinct monic non-constant
/// factors with multiplicities. All rational content lives in the numerator,
/// so the expanded denominator always has leading coefficient 1. Factors are
/// cancelled against the numerator by trial division; there is no
/// multivariate gcd, so two equal functions may differ in representation and
/// equality goes through cross-multiplication.
class RatFunc {
 public:
  using Factor = std::pair<SparsePoly, int>;

  RatFunc() = default;
  RatFunc(long constant) : num_(constant) {}                  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& constant) : num_(constant) {}       // NOLINT(google-explicit-constructor)
  RatFunc(SparsePoly numerator) : num_(std::move(numerator)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `denominator` is zero.
  RatFunc(SparsePoly numerator, const SparsePoly& denominator);

  static RatFunc symbol(const std::string& name) { return RatFunc(SparsePoly::variable(name)); }

  const SparsePoly& numerator() const { return num_; }
  /// Expanded monic denominator.
  SparsePoly denominator() const;
  const std::vector<Factor>& denominator_factors() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  /// Value of a constant function; throws InvalidArgument otherwise.
  Rational constant_value() const;
  bool depends_on(std::string_view var) const;
  std::set<std::string, SymbolLess> variables() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc pow(int exponent) const;

  /// Exact equality by cross-multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;
  /// {"text": ..., "numerator": poly, "denominator": poly}
  nlohmann::ordered_json to_json() const;

 private:
  SparsePoly num_;
  std::vector<Factor> den_;

  void cancel();
  friend RatFunc derivative(const RatFunc& f, std::string_view var);
  friend RatFunc substitute(const RatFunc& f, std::string_view var, const RatFunc& value);
  friend RatFunc limit(const RatFunc& f, std::string_view var, const Rational& value);
  friend Rational evaluate(const RatFunc& f, const Assignment& point);
};

/// Formal partial derivative (quotient rule on the factored denominator).
RatFunc derivative(const RatFunc& f, std::string_view var);

/// Replaces `var` by `value` everywhere. Throws PoleAtPoint when a
/// denominator factor becomes identically zero.
RatFunc substitute(const RatFunc& f, std::string_view var, const RatFunc& value);

/// Exact limit var -> value, cancelling powers of (var - value) between
/// numerator and denominator. Throws PoleAtPoint for a genuine pole.
RatFunc limit(const RatFunc& f, std::string_view var, const Rational& value);

/// Exact value at a point covering every variable; PoleAtPoint on a vanishing denominator.
Rational evaluate(const RatFunc& f, const Assignment& point);
Rational evaluate(const SparsePoly& p, const Assignment& point);

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

bool equal_exact(const RatFunc& a, const RatFunc& b);

/// Schwartz-Zippel test: compares a and b at `trials` random points whose
/// coordinates are p/q with p, q uniform in [1, 10^6]. One-sided: a false
/// answer is always correct. Throws DegenerateSample after 100 failed
/// attempts to find a pole-free point in one trial.
bool equal_probabilistic(const RatFunc& a, const RatFunc& b, std::uint64_t seed, int trials);

}  // namespace defcalc

#endif  // DEFCALC_RAT_FUNC_HPP
