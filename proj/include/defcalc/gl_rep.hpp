#ifndef DEFCALC_GL_REP_HPP
#define DEFCALC_GL_REP_HPP

#include <string>
#include <vector>

#include "defcalc/matrix.hpp"
#include "defcalc/report.hpp"

namespace defcalc {

/// gl_M generators indexed [a][b], 0-based.
using Generators = std::vector<std::vector<RationalMatrix>>;

/// Exponent vectors of total degree k in n variables, first variable's
/// exponent descending (x1^2, x1 x2, x2^2, ...).
std::vector<std::vector<int>> monomials_of_degree(int n, int k);

/// Failing quadruples of [e_ab, e_cd] = d_bc e_ad - d_ad e_cb, capped at `limit`.
Json relation_violations(const Generators& e, int limit = 4);

/// A finite-dimensional gl_M module with its generator matrices.
class RepSpace {
 public:
  /// Throws InvalidArgument if the matrices violate the commutation relations.
  RepSpace(std::string name, std::vector<std::string> basis_labels, Generators action);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(action_.size()); }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Generators& generators() const { return action_; }
  const RationalMatrix& e(int a, int b) const { return action_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)); }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  Generators action_;
};

RepSpace vector_rep(int M);
/// Degree-k polynomials in x1..xM with e_ab = x_a d/dx_b.
RepSpace symmetric_power_rep(int M, int k);
/// "vector" or "sym:k".
RepSpace parse_module(const std::string& spec, int M);

/// gl_M acting on N slots of one space: (e_ab)_(i) for each slot i.
/// Built from Kronecker products or from the polynomial duality model.
class SlotAction {
 public:
  /// gens[i][a][b] = (e_ab)_(i).
  SlotAction(std::string name, Eigen::Index dim, std::vector<Generators> gens);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int slots() const { return static_cast<int>(gens_.size()); }
  Eigen::Index dim() const { return dim_; }

  /// (e_ab)_(i); throws IndexOutOfRange.
  const RationalMatrix& at(int a, int b, int i) const;
  /// Delta^N(e_ab) = sum over slots.
  const RationalMatrix& coproduct(int a, int b) const;
  Generators coproduct_generators() const;
  const Generators& slot_generators(int i) const;

 private:
  void check_index(int a, int b) const;

  std::string name_;
  Eigen::Index dim_;
  int rank_;
  std::vector<Generators> gens_;
  Generators delta_;
};

/// Ordered tensor product of modules over the same gl_M.
class TensorContext {
 public:
  explicit TensorContext(std::vector<RepSpace> factors);
  static TensorContext uniform(const RepSpace& factor, int N);

  int rank() const { return factors_.front().rank(); }
  int size() const { return static_cast<int>(factors_.size()); }
  Eigen::Index total_dim() const { return action_.dim(); }
  const std::vector<RepSpace>& factors() const { return factors_; }
  const SlotAction& action() const { return action_; }
  Json to_json() const;

 private:
  static SlotAction build(const std::vector<RepSpace>& factors);

  std::vector<RepSpace> factors_;
  SlotAction action_;
};

/// id x ... x e_ab x ... x id with e_ab in slot i.
RationalMatrix embed_at(int a, int b, int i, const TensorContext& ctx);
RationalMatrix coproduct_embed(int a, int b, const TensorContext& ctx);

/// sum_ab e_ab e_ba.
RationalMatrix casimir_c2(const Generators& e);
RationalMatrix casimir_c2(const RepSpace& space);
RationalMatrix casimir_c2(const TensorContext& ctx);

struct OmegaTensors {
  RationalMatrix omega;
  RationalMatrix plus;
  RationalMatrix minus;
};

/// Omega_(ij) and its +/- halves; throws IndexOutOfRange or SameSlot.
OmegaTensors omega_tensors(const SlotAction& action, int i, int j);
OmegaTensors omega_tensors(const TensorContext& ctx, int i, int j);

/// Swap of two tensor factors of equal dimension.
RationalMatrix flip(const TensorContext& ctx, int i, int j);

/// Cartan automorphism e_ab -> -e_ba: involution, automorphism of the
/// structure constants, and (w x w)(Omega^+-) = Omega^-+ on every slot pair.
CheckReport cartan_automorphism_check(const SlotAction& action);

/// Commutation relations, centrality of C2, Omega decompositions, Cartan
/// automorphism, flip identification on vector factors, and the
/// infinitesimal braid relations when N >= 3.
std::vector<CheckReport> gl_structure_checks(const TensorContext& ctx);

CheckReport relations_check(const SlotAction& action);
CheckReport casimir_centrality_check(const SlotAction& action);
CheckReport omega_decomposition_check(const SlotAction& action);
/// Omega_(ij) = 1/2 (Delta_ij(C2) - C2_(i) - C2_(j)).
CheckReport omega_casimir_check(const SlotAction& action);
CheckReport omega_invariance_check(const SlotAction& action);
CheckReport omega_flip_check(const TensorContext& ctx);
/// [O_ij, O_ik + O_jk] = 0 and [O_ij, O_kl] = 0 for disjoint slots.
CheckReport braid_check(const SlotAction& action);

}  // namespace defcalc

#endif  // DEFCALC_GL_REP_HPP
