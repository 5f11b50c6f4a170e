#ifndef DEFCALC_KZ_DD_HPP
#define DEFCALC_KZ_DD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "defcalc/diff_op.hpp"
#include "defcalc/gl_rep.hpp"

namespace defcalc {

enum class OpKind { r, t, rt };
enum class Construction { direct, substitution };

std::string_view to_string(OpKind k);
OpKind parse_op_kind(std::string_view s);

struct KZParams {
  RatFunc kappa = RatFunc::symbol("kappa");
  RatFunc hbar = RatFunc::symbol("hbar");
  RatFunc eta = RatFunc::symbol("eta");

  Json to_json() const;
};

/// A slot action together with the coordinates the operators live on:
/// one position variable per slot and one dynamical variable per gl index.
class KZContext {
 public:
  /// Throws InvalidArgument for kappa = 0, hbar = 0, mismatched variable
  /// counts, or if some Delta(e_aa) fails to commute with (e_aa)_(i).
  KZContext(std::shared_ptr<const SlotAction> action, std::vector<std::string> positions,
            std::vector<std::string> dynamicals, KZParams params = {});

  /// Positions z1..zN, dynamicals lambda1..lambdaM.
  static KZContext standard(std::shared_ptr<const SlotAction> action, KZParams params = {});
  /// Roles exchanged: positions lambda1..lambdaN, dynamicals z1..zM, where N
  /// and M are the slot count and rank of this action.
  static KZContext swapped(std::shared_ptr<const SlotAction> action, KZParams params = {});
  static KZContext from_tensor(const TensorContext& ctx, KZParams params = {});

  const SlotAction& action() const { return *action_; }
  int rank() const { return action_->rank(); }
  int slots() const { return action_->slots(); }
  Eigen::Index dim() const { return action_->dim(); }
  const std::vector<std::string>& positions() const { return positions_; }
  const std::vector<std::string>& dynamicals() const { return dynamicals_; }
  const KZParams& params() const { return params_; }
  RatFunc position(int i) const { return RatFunc::symbol(positions_.at(static_cast<std::size_t>(i))); }
  RatFunc dynamical(int a) const { return RatFunc::symbol(dynamicals_.at(static_cast<std::size_t>(a))); }

  Json to_json() const;

 private:
  std::shared_ptr<const SlotAction> action_;
  std::vector<std::string> positions_;
  std::vector<std::string> dynamicals_;
  KZParams params_;
};

/// KZ operator for site i (0-based); throws IndexOutOfRange.
///   r:  k d_i - sum_a l_a (e_aa)_(i) - sum_{j!=i} O_ij / (z_i - z_j)
///   t:  k z_i d_i - sum_a (l_a - e_aa)(e_aa)_(i) - sum_{j!=i} (z_i O+_ij + z_j O-_ij) / (z_i - z_j)
///   rt: hbar t + eta r (direct), or hbar * t with z -> z + eta/hbar and
///       l -> (1 + eta/hbar) l (substitution).
/// Bare e_ab means Delta^N(e_ab).
DiffOp build_kz(OpKind kind, int i, const KZContext& ctx, Construction how = Construction::direct);

/// DD operator for dynamical index a (0-based); throws IndexOutOfRange.
///   r:  k d_a - sum_i z_i (e_aa)_(i) - sum_{b!=a} (e_ab e_ba - e_aa) / (l_a - l_b)
///   t:  k l_a d_a + e_aa^2/2 - sum_i z_i (e_aa)_(i) - sum_b sum_{i<j} (e_ab)_(i)(e_ba)_(j)
///       - sum_{b!=a} l_b (e_ab e_ba - e_aa) / (l_a - l_b)
///   rt: hbar t + eta r (direct), or hbar * t with l -> l + eta/hbar and
///       z -> (1 + eta/hbar) z (substitution).
DiffOp build_dd(OpKind kind, int a, const KZContext& ctx, Construction how = Construction::direct);

enum class Identity { eq30, eq35, flatness, compat };

std::string_view to_string(Identity w);
Identity parse_identity(std::string_view s);

struct CheckMode {
  bool exact = true;
  std::uint64_t seed = 7;
  int trials = 5;

  static CheckMode probabilistic(std::uint64_t seed, int trials) { return {false, seed, trials}; }
  Json to_json() const;
};

/// eq30: substitution-built rt KZ = direct rt KZ, every site.
/// eq35: same for DD, every dynamical index.
/// flatness: [KZ_i, KZ_j] = 0 and [DD_a, DD_b] = 0 for the given kind.
/// compat: [KZ_i, DD_a] = 0 for the given kind.
/// Failures are reported with the offending operator as witness, never thrown.
CheckReport check_identity(Identity which, OpKind kind, const KZContext& ctx, const CheckMode& mode = {});

}  // namespace defcalc

#endif  // DEFCALC_KZ_DD_HPP
