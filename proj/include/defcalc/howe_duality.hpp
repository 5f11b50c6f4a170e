#ifndef DEFCALC_HOWE_DUALITY_HPP
#define DEFCALC_HOWE_DUALITY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "defcalc/kz_dd.hpp"

namespace defcalc {

/// Polynomials in an N x M matrix of variables x_ia, total degree <= d.
/// gl_M acts row by row, (e_ab)_(i) = x_ia d/dx_ib, with one slot per row;
/// gl_N acts column by column, (e_ij)_(a) = x_ia d/dx_ja, one slot per column.
class PolynomialModel {
 public:
  /// Throws InvalidArgument unless N, M >= 1 and d >= 0.
  PolynomialModel(int N, int M, int degree);

  int N() const { return n_; }
  int M() const { return m_; }
  int degree() const { return degree_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }

  /// Variable index of x_ia (0-based i, a).
  int variable(int i, int a) const { return i * m_ + a; }
  /// Exponent vectors, graded by degree.
  const std::vector<std::vector<int>>& basis() const { return basis_; }
  std::vector<std::string> basis_labels() const;
  Eigen::Index stratum_offset(int k) const { return offsets_.at(static_cast<std::size_t>(k)); }
  Eigen::Index stratum_dim(int k) const;

  /// x_p d/dx_q on the whole truncated space.
  RationalMatrix polarization(int p, int q) const;

  std::shared_ptr<const SlotAction> gl_M_action() const { return gl_m_; }
  std::shared_ptr<const SlotAction> gl_N_action() const { return gl_n_; }

  Json to_json() const;

 private:
  int n_, m_, degree_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, Eigen::Index> index_;
  std::vector<Eigen::Index> offsets_;
  std::shared_ptr<const SlotAction> gl_m_;
  std::shared_ptr<const SlotAction> gl_n_;
};

/// Commutation relations of both actions and [Delta(e_ab), Delta(E_ij)] = 0.
CheckReport model_check(const PolynomialModel& model);

enum class ModelSide { gl_M, gl_N };

/// KZ operator on the model. gl_M: site i with positions z and dynamicals
/// lambda. gl_N: roles swapped, so the sites are the columns and the
/// positions are lambda_1..lambda_M.
DiffOp realize_kz_on_model(OpKind kind, int index, const PolynomialModel& model, const KZParams& params,
                           ModelSide side = ModelSide::gl_M, Construction how = Construction::substitution);
/// DD operator on the model. swapped = false: gl_M with dynamicals lambda.
/// swapped = true: gl_N with dynamicals z_1..z_N and positions lambda.
DiffOp realize_dd_on_model(OpKind kind, int index, const PolynomialModel& model, const KZParams& params,
                           bool swapped, Construction how = Construction::substitution);

/// Nonzero block of a duality residual.
struct StratumResidual {
  std::string identification;
  int index = 0;
  int degree = 0;
  DiffOp residual;
};

struct DualityReport {
  std::vector<StratumResidual> residuals;
  CheckReport report;
};

/// Both identifications, every index, every degree stratum:
///   KZ_i(gl_M; z, lambda) - DD_i(gl_N; lambda, z)
///   DD_a(gl_M; z, lambda) - KZ_a(gl_N; lambda, z)
/// Residuals are stored and emitted only when nonzero. Needs d >= 1.
DualityReport check_duality(OpKind kind, const PolynomialModel& model, const KZParams& params = {},
                            const CheckMode& mode = {});

/// residual(rt) = hbar residual(t) + eta residual(r) for every operator pair,
/// and residual(rt) = 0 wherever the r and t residuals both vanish.
/// Nonzero r and t residual counts are recorded in the witness.
CheckReport duality_linearity_check(const PolynomialModel& model, const KZParams& params = {},
                                    const CheckMode& mode = {});

/// Every realized operator has its coefficients inside the degree strata.
CheckReport block_diagonal_check(const PolynomialModel& model, const KZParams& params = {});

}  // namespace defcalc

#endif  // DEFCALC_HOWE_DUALITY_HPP
