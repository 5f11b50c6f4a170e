#ifndef DEFCALC_DIFF_OP_HPP
#define DEFCALC_DIFF_OP_HPP

#include <map>
#include <set>
#include <string>

#include "defcalc/matrix.hpp"
#include "defcalc/report.hpp"

namespace defcalc {

/// Monomial in the partial derivatives: variable -> order. Empty = identity.
using DerivMonomial = std::map<std::string, int, SymbolLess>;

std::string to_string(const DerivMonomial& d);

/// Differential operator sum_alpha A_alpha(vars) d^alpha with square
/// matrix coefficients; derivatives stand to the right of coefficients.
class DiffOp {
 public:
  explicit DiffOp(Eigen::Index dim = 0) : dim_(dim) {}
  static DiffOp matrix(RatFuncMatrix m);
  /// coefficient * d/dvar (times the identity matrix).
  static DiffOp partial(const std::string& var, const RatFunc& coefficient, Eigen::Index dim);

  Eigen::Index dim() const { return dim_; }
  const std::map<DerivMonomial, RatFuncMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of d^alpha (zero matrix when absent).
  RatFuncMatrix coefficient(const DerivMonomial& alpha) const;

  void add(const DerivMonomial& alpha, const RatFuncMatrix& m);
  /// Adds f * m to the coefficient of d^alpha.
  void add(const DerivMonomial& alpha, const RatFunc& f, const RationalMatrix& m);

  friend DiffOp operator+(DiffOp a, const DiffOp& b);
  friend DiffOp operator-(DiffOp a, const DiffOp& b);
  friend DiffOp operator*(const RatFunc& f, const DiffOp& a);

  /// Formal substitution var -> value in every coefficient.
  DiffOp substitute(const std::string& var, const RatFunc& value) const;
  /// Restriction of every coefficient to the diagonal block [start, start + size).
  DiffOp block(Eigen::Index start, Eigen::Index size) const;
  std::set<std::string, SymbolLess> variables() const;

  /// {"dim", "terms": [{"derivative", "matrix"}]}.
  Json to_json() const;

 private:
  Eigen::Index dim_;
  std::map<DerivMonomial, RatFuncMatrix> terms_;
};

/// A o B with d_v o f = f d_v + df/dv applied through the general Leibniz rule.
DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

using EvaluatedOp = std::map<DerivMonomial, RationalMatrix>;

/// Coefficients at a point; zero coefficients are dropped.
EvaluatedOp evaluate(const DiffOp& a, const Assignment& point);
/// [A, B] with coefficients evaluated at the point, without forming the
/// symbolic commutator.
EvaluatedOp commutator_at(const DiffOp& a, const DiffOp& b, const Assignment& point);
bool is_zero(const EvaluatedOp& op);
Json to_json(const EvaluatedOp& op);

}  // namespace defcalc

#endif  // DEFCALC_DIFF_OP_HPP
