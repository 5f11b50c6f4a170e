#ifndef DEFCALC_QUANTUM_PLANE_HPP
#define DEFCALC_QUANTUM_PLANE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <array>

#include "defcalc/deformed_functions.hpp"
#include "defcalc/linear_solve.hpp"

namespace defcalc {

/// Word over {x, y}.
using PlaneWord = std::string;

/// Element of the (q, eta)-plane in the basis y^a x^b, keyed by (a, b).
class PlanePolynomial {
 public:
  using Monomial = std::pair<int, int>;

  PlanePolynomial() = default;
  static PlanePolynomial monomial(int a, int b, RatFunc coefficient = RatFunc(1));

  const std::map<Monomial, RatFunc>& terms() const { return terms_; }
  RatFunc coefficient(int a, int b) const;
  bool is_zero() const { return terms_.empty(); }
  void add(Monomial m, const RatFunc& c);

  friend PlanePolynomial operator+(PlanePolynomial a, const PlanePolynomial& b);
  friend PlanePolynomial operator*(const RatFunc& c, const PlanePolynomial& p);
  friend bool operator==(const PlanePolynomial& a, const PlanePolynomial& b) { return a.terms_ == b.terms_; }

  /// e.g. "q^2*y^2*x + (eta+eta*q)*y^3", highest y-power first.
  std::string to_string() const;
  Json to_json() const;

 private:
  std::map<Monomial, RatFunc> terms_;
};

enum class RewriteStrategy { leftmost, rightmost };

/// Rewrites xy -> q yx + eta yy until every word reads y...yx...x.
/// Throws InvalidArgument on letters other than x and y.
PlanePolynomial normal_order(const PlaneWord& w, const DeformationParams& params = {},
                             RewriteStrategy strategy = RewriteStrategy::leftmost);

/// Product in the plane, normal ordered.
PlanePolynomial multiply(const PlanePolynomial& a, const PlanePolynomial& b, const DeformationParams& params = {});

/// Normal-ordered (x + y)^n.
PlanePolynomial power_of_sum(int n, const DeformationParams& params = {});

/// Seeded words over {x, y} with lengths in [0, max_length].
std::vector<PlaneWord> random_words(std::uint64_t seed, int count, int max_length);

/// Leftmost-first and rightmost-first rewriting give the same normal form.
CheckReport confluence_check(const std::vector<PlaneWord>& words, const DeformationParams& params = {});

/// eta = 0 gives q^inversions y^a x^b (Manin plane), q = 1 agrees with the
/// Jordan rule x y^c = y^c x + c eta y^(c+1), and q = 1, eta = 0 just sorts.
CheckReport specialization_check(const std::vector<PlaneWord>& words);

struct FunctionalEquationSolution {
  SolveOutcome outcome = SolveOutcome::unique;
  /// Highest degree whose system was solved; below `degree` only on no_solution.
  int solved_degree = 0;
  /// f1, f2, f3 coefficient lists of length solved_degree + 1.
  std::array<SeriesCoeffs, 3> f;
  /// Families met at underdetermined degrees.
  Json families = Json::array();
};

FunctionalEquationSolution solve_functional_table(const DeformationParams& params, int degree);

/// Solves f1(x + y) = f2(y) f3(x) degree by degree up to `degree`, with
/// f_i(0) = 1 and the gauge f2'(0) = f3'(0) = 1. Passes when some f_i has the
/// coefficients 1/(n)_{q,eta}!; the witness carries the solved table.
CheckReport solve_functional_equation(const DeformationParams& params, int degree);

}  // namespace defcalc

#endif  // DEFCALC_QUANTUM_PLANE_HPP
