#ifndef DEFCALC_SPARSE_POLY_HPP
#define DEFCALC_SPARSE_POLY_HPP

#include <boost/container/small_vector.hpp>
#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defcalc/rational.hpp"

namespace defcalc {

/// Canonical symbol order: alphabetic prefix first, then the numeric suffix
/// compared as a number, so z2 < z10 and lambda1 < q < z1.
bool symbol_less(std::string_view a, std::string_view b);

struct SymbolLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return symbol_less(a, b); }
};

using VarList = std::vector<std::string>;
using Exponents = boost::container::small_vector<int, 8>;
using Assignment = std::map<std::string, Rational, SymbolLess>;

/// Graded lexicographic comparison of equal-length exponent vectors.
int grlex_compare(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial with rational coefficients.
///
/// Variables are kept sorted by symbol_less and only variables that occur in
/// some term are stored. Terms are sorted ascending in graded-lex order, so
/// the leading term is the last one. Values are immutable once built.
class SparsePoly {
 public:
  using Term = std::pair<Exponents, Rational>;

  SparsePoly() = default;
  SparsePoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  SparsePoly(long constant) : SparsePoly(Rational(constant)) {}  // NOLINT

  static SparsePoly variable(const std::string& name);
  /// Builds a canonical polynomial from arbitrary (unsorted, duplicated, zero) terms.
  static SparsePoly from_terms(VarList vars, std::vector<Term> terms);

  const VarList& vars() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && vars().empty()); }
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.back(); }
  const Rational& leading_coefficient() const { return terms_.back().second; }
  int total_degree() const;
  int degree_in(std::string_view var) const;
  bool depends_on(std::string_view var) const;

  SparsePoly operator-() const;
  SparsePoly scaled(const Rational& factor) const;
  SparsePoly pow(unsigned exponent) const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  /// Quotient when `divisor` divides this polynomial exactly, nullopt otherwise.
  std::optional<SparsePoly> divide_exact(const SparsePoly& divisor) const;

  /// Coefficients c_k (free of `var`) with p = sum_k c_k var^k.
  std::vector<SparsePoly> coefficients_in(std::string_view var) const;

  SparsePoly substitute(std::string_view var, const Rational& value) const;
  Rational evaluate(const Assignment& point) const;

  std::string to_string() const;
  /// {"vars": [...], "terms": {"e1,e2,...": "p/q", ...}} in ascending graded-lex order.
  nlohmann::ordered_json to_json() const;

 private:
  std::shared_ptr<const VarList> vars_;
  std::vector<Term> terms_;

  SparsePoly(std::shared_ptr<const VarList> vars, std::vector<Term> terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}
  SparsePoly embedded(const std::shared_ptr<const VarList>& target) const;
  void trim_unused_vars();
  friend std::pair<SparsePoly, SparsePoly> unify(const SparsePoly& a, const SparsePoly& b);
};

SparsePoly derivative(const SparsePoly& p, std::string_view var);

/// Total order on polynomials (variables, then terms); used for canonical factor lists.
int compare(const SparsePoly& a, const SparsePoly& b);

}  // namespace defcalc

#endif  // DEFCALC_SPARSE_POLY_HPP
