#include "defcalc/gl_rep.hpp"

#include <map>

#include "defcalc/errors.hpp"

namespace defcalc {

namespace {

RationalMatrix identity(Eigen::Index n) { return RationalMatrix::Identity(n, n); }

RationalMatrix zero(Eigen::Index n) { return RationalMatrix::Zero(n, n); }

std::string monomial_label(const std::vector<int>& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(k + 1);
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

Json pair_json(int i, int j) { return Json::array({i + 1, j + 1}); }

// Omega^+ or Omega^- from arbitrary slot generators.
RationalMatrix omega_half(const Generators& gi, const Generators& gj, bool plus) {
  const auto m = static_cast<int>(gi.size());
  const Eigen::Index n = gi[0][0].rows();
  RationalMatrix out = zero(n);
  for (int a = 0; a < m; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    out += product(gi[ua][ua], gj[ua][ua]) * Rational(1, 2);
    for (int b = a + 1; b < m; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      out += plus ? product(gi[ua][ub], gj[ub][ua]) : product(gi[ub][ua], gj[ua][ub]);
    }
  }
  return out;
}

Generators cartan_image(const Generators& e) {
  Generators out = e;
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = 0; b < e.size(); ++b) out[a][b] = -e[b][a];
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> monomials_of_degree(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  for (int first = k; first >= 0; --first) {
    for (auto& rest : monomials_of_degree(n - 1, k - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

namespace {

std::vector<std::vector<SparseRationalMatrix>> sparse_generators(const Generators& e) {
  std::vector<std::vector<SparseRationalMatrix>> out;
  for (const auto& row : e) {
    auto& r = out.emplace_back();
    for (const auto& m : row) r.push_back(sparse(m));
  }
  return out;
}

}  // namespace

Json relation_violations(const Generators& dense, int limit) {
  Json bad = Json::array();
  const auto m = static_cast<int>(dense.size());
  if (m == 0) return bad;
  const auto e = sparse_generators(dense);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        for (int d = 0; d < m; ++d) {
          const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b),
                     uc = static_cast<std::size_t>(c), ud = static_cast<std::size_t>(d);
          SparseRationalMatrix gap = commutator(e[ua][ub], e[uc][ud]);
          if (b == c) gap -= e[ua][ud];
          if (a == d) gap += e[uc][ub];
          if (!is_zero(gap)) {
            bad.push_back(Json::array({a + 1, b + 1, c + 1, d + 1}));
            if (static_cast<int>(bad.size()) >= limit) return bad;
          }
        }
      }
    }
  }
  return bad;
}

RepSpace::RepSpace(std::string name, std::vector<std::string> basis_labels, Generators action)
    : name_(std::move(name)), labels_(std::move(basis_labels)), action_(std::move(action)) {
  if (action_.empty()) throw InvalidArgument("gl_M module needs M >= 1");
  for (const auto& row : action_) {
    for (const auto& m : row) {
      if (m.rows() != dim() || m.cols() != dim()) throw InvalidArgument("generator matrix has the wrong size");
    }
  }
  const Json bad = relation_violations(action_, 1);
  if (!bad.empty()) throw InvalidArgument("module " + name_ + " violates the gl_M relations at " + bad.dump());
}

RepSpace vector_rep(int M) {
  if (M < 1) throw InvalidArgument("M must be positive");
  Generators e(static_cast<std::size_t>(M));
  std::vector<std::string> labels;
  for (int a = 0; a < M; ++a) {
    labels.push_back("v" + std::to_string(a + 1));
    for (int b = 0; b < M; ++b) e[static_cast<std::size_t>(a)].push_back(elementary(M, a, b));
  }
  return {"vector", std::move(labels), std::move(e)};
}

RepSpace symmetric_power_rep(int M, int k) {
  if (M < 1) throw InvalidArgument("M must be positive");
  if (k < 0) throw InvalidArgument("symmetric power must be nonnegative");
  const auto basis = monomials_of_degree(M, k);
  std::map<std::vector<int>, Eigen::Index> index;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    index[basis[s]] = static_cast<Eigen::Index>(s);
    labels.push_back(monomial_label(basis[s]));
  }
  const auto n = static_cast<Eigen::Index>(basis.size());
  Generators e(static_cast<std::size_t>(M), std::vector<RationalMatrix>(static_cast<std::size_t>(M), zero(n)));
  for (int a = 0; a < M; ++a) {
    for (int b = 0; b < M; ++b) {
      auto& m = e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      for (std::size_t s = 0; s < basis.size(); ++s) {
        const int power = basis[s][static_cast<std::size_t>(b)];
        if (power == 0) continue;
        auto image = basis[s];
        --image[static_cast<std::size_t>(b)];
        ++image[static_cast<std::size_t>(a)];
        m(index.at(image), static_cast<Eigen::Index>(s)) = Rational(power);
      }
    }
  }
  return {"sym:" + std::to_string(k), std::move(labels), std::move(e)};
}

RepSpace parse_module(const std::string& spec, int M) {
  if (spec == "vector") return vector_rep(M);
  if (spec.rfind("sym:", 0) == 0) {
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(spec.substr(4), &used);
    } catch (const std::exception&) {
    }
    if (used == spec.size() - 4 && k >= 0) return symmetric_power_rep(M, k);
  }
  throw InvalidArgument("unknown module '" + spec + "' (expected vector or sym:k)");
}

SlotAction::SlotAction(std::string name, Eigen::Index dim, std::vector<Generators> gens)
    : name_(std::move(name)), dim_(dim), rank_(gens.empty() ? 0 : static_cast<int>(gens[0].size())), gens_(std::move(gens)) {
  if (gens_.empty() || rank_ == 0) throw InvalidArgument("slot action needs at least one slot and M >= 1");
  const auto m = static_cast<std::size_t>(rank_);
  delta_.assign(m, std::vector<RationalMatrix>(m, zero(dim_)));
  for (const auto& g : gens_) {
    if (g.size() != m) throw InvalidArgument("slots disagree on M");
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) delta_[a][b] += g[a][b];
    }
  }
}

void SlotAction::check_index(int a, int b) const {
  if (a < 0 || a >= rank_ || b < 0 || b >= rank_) {
    throw IndexOutOfRange("generator index (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                          ") outside 1.." + std::to_string(rank_));
  }
}

const RationalMatrix& SlotAction::at(int a, int b, int i) const {
  check_index(a, b);
  return slot_generators(i)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

const Generators& SlotAction::slot_generators(int i) const {
  if (i < 0 || i >= slots()) {
    throw IndexOutOfRange("slot " + std::to_string(i + 1) + " outside 1.." + std::to_string(slots()));
  }
  return gens_[static_cast<std::size_t>(i)];
}

const RationalMatrix& SlotAction::coproduct(int a, int b) const {
  check_index(a, b);
  return delta_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Generators SlotAction::coproduct_generators() const { return delta_; }

TensorContext::TensorContext(std::vector<RepSpace> factors) : factors_(std::move(factors)), action_(build(factors_)) {}

TensorContext TensorContext::uniform(const RepSpace& factor, int N) {
  if (N < 1) throw InvalidArgument("N must be positive");
  return TensorContext(std::vector<RepSpace>(static_cast<std::size_t>(N), factor));
}

SlotAction TensorContext::build(const std::vector<RepSpace>& factors) {
  if (factors.empty()) throw InvalidArgument("tensor product needs at least one factor");
  const int m = factors.front().rank();
  std::string name;
  for (const auto& f : factors) {
    if (f.rank() != m) throw InvalidArgument("tensor factors over different gl_M");
    name += (name.empty() ? "" : "x") + f.name();
  }
  std::vector<Generators> gens;
  Eigen::Index total = 1;
  for (const auto& f : factors) total *= f.dim();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Eigen::Index left = 1, right = 1;
    for (std::size_t k = 0; k < i; ++k) left *= factors[k].dim();
    for (std::size_t k = i + 1; k < factors.size(); ++k) right *= factors[k].dim();
    Generators g(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        g[static_cast<std::size_t>(a)].push_back(kron<Rational>(kron<Rational>(identity(left), factors[i].e(a, b)), identity(right)));
      }
    }
    gens.push_back(std::move(g));
  }
  return {name, total, std::move(gens)};
}

Json TensorContext::to_json() const {
  Json f = Json::array();
  for (const auto& x : factors_) f.push_back(x.name());
  return {{"M", rank()}, {"N", size()}, {"factors", f}};
}

RationalMatrix embed_at(int a, int b, int i, const TensorContext& ctx) { return ctx.action().at(a, b, i); }

RationalMatrix coproduct_embed(int a, int b, const TensorContext& ctx) { return ctx.action().coproduct(a, b); }

RationalMatrix casimir_c2(const Generators& e) {
  const Eigen::Index n = e[0][0].rows();
  RationalMatrix c = zero(n);
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = 0; b < e.size(); ++b) c += product(e[a][b], e[b][a]);
  }
  return c;
}

RationalMatrix casimir_c2(const RepSpace& space) { return casimir_c2(space.generators()); }

RationalMatrix casimir_c2(const TensorContext& ctx) { return casimir_c2(ctx.action().coproduct_generators()); }

OmegaTensors omega_tensors(const SlotAction& action, int i, int j) {
  const Generators& gi = action.slot_generators(i);
  const Generators& gj = action.slot_generators(j);
  if (i == j) throw SameSlot();
  OmegaTensors out{zero(action.dim()), omega_half(gi, gj, true), omega_half(gi, gj, false)};
  for (std::size_t a = 0; a < gi.size(); ++a) {
    for (std::size_t b = 0; b < gi.size(); ++b) out.omega += product(gi[a][b], gj[b][a]);
  }
  return out;
}

OmegaTensors omega_tensors(const TensorContext& ctx, int i, int j) { return omega_tensors(ctx.action(), i, j); }

RationalMatrix flip(const TensorContext& ctx, int i, int j) {
  const auto& f = ctx.factors();
  if (i < 0 || j < 0 || i >= ctx.size() || j >= ctx.size()) throw IndexOutOfRange("flip slot out of range");
  if (f[static_cast<std::size_t>(i)].dim() != f[static_cast<std::size_t>(j)].dim()) {
    throw InvalidArgument("flip needs factors of equal dimension");
  }
  const Eigen::Index n = ctx.total_dim();
  RationalMatrix p = zero(n);
  std::vector<Eigen::Index> digits(f.size());
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index rest = col;
    for (std::size_t k = f.size(); k-- > 0;) {
      digits[k] = rest % f[k].dim();
      rest /= f[k].dim();
    }
    std::swap(digits[static_cast<std::size_t>(i)], digits[static_cast<std::size_t>(j)]);
    Eigen::Index row = 0;
    for (std::size_t k = 0; k < f.size(); ++k) row = row * f[k].dim() + digits[k];
    p(row, col) = Rational(1);
  }
  return p;
}

CheckReport relations_check(const SlotAction& action) {
  Json bad = Json::object();
  for (int i = 0; i < action.slots(); ++i) {
    Json v = relation_violations(action.slot_generators(i));
    if (!v.empty()) bad["slot " + std::to_string(i + 1)] = v;
  }
  Json v = relation_violations(action.coproduct_generators());
  if (!v.empty()) bad["coproduct"] = v;
  // Distinct slots commute.
  Json cross = Json::array();
  std::vector<std::vector<std::vector<SparseRationalMatrix>>> slot;
  for (int i = 0; i < action.slots(); ++i) slot.push_back(sparse_generators(action.slot_generators(i)));
  for (int i = 0; i < action.slots(); ++i) {
    for (int j = i + 1; j < action.slots(); ++j) {
      for (int a = 0; a < action.rank(); ++a) {
        for (int b = 0; b < action.rank(); ++b) {
          for (int c = 0; c < action.rank(); ++c) {
            for (int d = 0; d < action.rank(); ++d) {
              if (cross.size() < 4 && !is_zero(commutator(slot[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                                                       slot[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]))) {
                cross.push_back({{"slots", pair_json(i, j)}, {"generators", Json::array({a + 1, b + 1, c + 1, d + 1})}});
              }
            }
          }
        }
      }
    }
  }
  if (!cross.empty()) bad["slots_do_not_commute"] = cross;
  const bool ok = bad.empty();
  return make_report("gl_rep.relations", {{"action", action.name()}, {"M", action.rank()}, {"N", action.slots()}}, ok,
                     ok ? Json{{"quadruples_per_slot", action.rank() * action.rank() * action.rank() * action.rank()}}
                        : Json{{"violations", bad}});
}

CheckReport casimir_centrality_check(const SlotAction& action) {
  const Generators delta = action.coproduct_generators();
  const RationalMatrix c2 = casimir_c2(delta);
  Json bad = Json::array();
  for (int a = 0; a < action.rank(); ++a) {
    for (int b = 0; b < action.rank(); ++b) {
      if (!is_zero<Rational>(commutator(c2, action.coproduct(a, b)))) bad.push_back(Json::array({a + 1, b + 1}));
    }
  }
  const bool ok = bad.empty();
  return make_report("gl_rep.casimir_central", {{"action", action.name()}, {"M", action.rank()}, {"N", action.slots()}},
                     ok, ok ? Json::object() : Json{{"noncommuting_generators", bad}});
}

CheckReport omega_decomposition_check(const SlotAction& action) {
  Json bad = Json::array();
  for (int i = 0; i < action.slots(); ++i) {
    for (int j = 0; j < action.slots(); ++j) {
      if (i == j) continue;
      const auto o = omega_tensors(action, i, j);
      if (!equal<Rational>(o.omega, o.plus + o.minus)) bad.push_back(pair_json(i, j));
    }
  }
  const bool ok = bad.empty();
  return make_report("gl_rep.omega_split", {{"action", action.name()}, {"M", action.rank()}, {"N", action.slots()}}, ok,
                     ok ? Json::object() : Json{{"slot_pairs", bad}});
}

CheckReport omega_casimir_check(const SlotAction& action) {
  Json bad = Json::array();
  for (int i = 0; i < action.slots(); ++i) {
    for (int j = i + 1; j < action.slots(); ++j) {
      const Generators& gi = action.slot_generators(i);
      const Generators& gj = action.slot_generators(j);
      Generators pair = gi;
      for (std::size_t a = 0; a < gi.size(); ++a) {
        for (std::size_t b = 0; b < gi.size(); ++b) pair[a][b] = gi[a][b] + gj[a][b];
      }
      const RationalMatrix rhs = (casimir_c2(pair) - casimir_c2(gi) - casimir_c2(gj)) * Rational(1, 2);
      if (!equal<Rational>(omega_tensors(action, i, j).omega, rhs)) bad.push_back(pair_json(i, j));
    }
  }
  const bool ok = bad.empty();
  return make_report("gl_rep.omega_casimir", {{"action", action.name()}, {"M", action.rank()}, {"N", action.slots()}},
                     ok, ok ? Json::object() : Json{{"slot_pairs", bad}});
}

CheckReport omega_invariance_check(const SlotAction& action) {
  Json bad = Json::array();
  for (int i = 0; i < action.slots(); ++i) {
    for (int j = i + 1; j < action.slots(); ++j) {
      const RationalMatrix o = omega_tensors(action, i, j).omega;
      for (int a = 0; a < action.rank(); ++a) {
        for (int b = 0; b < action.rank(); ++b) {
          if (!is_zero<Rational>(commutator(o, action.coproduct(a, b)))) {
            bad.push_back({{"slots", pair_json(i, j)}, {"generator", Json::array({a + 1, b + 1})}});
          }
        }
      }
    }
  }
  const bool ok = bad.empty();
  return make_report("gl_rep.omega_invariant", {{"action", action.name()}, {"M", action.rank()}, {"N", action.slots()}},
                     ok, ok ? Json::object() : Json{{"violations", bad}});
}

CheckReport omega_flip_check(const TensorContext& ctx) {
  Json bad = Json::array();
  for (int i = 0; i < ctx.size(); ++i) {
    for (int j = i + 1; j < ctx.size(); ++j) {
      if (!equal<Rational>(omega_tensors(ctx, i, j).omega, flip(ctx, i, j))) bad.push_back(pair_json(i, j));
    }
  }
  const bool ok = bad.empty();
  return make_report("gl_rep.omega_flip", ctx.to_json(), ok, ok ? Json::object() : Json{{"slot_pairs", bad}});
}

CheckReport cartan_automorphism_check(const SlotAction& action) {
  Json bad = Json::object();
  Json involution = Json::array(), automorphism = Json::array(), swap = Json::array();
  for (int i = 0; i < action.slots(); ++i) {
    const Generators& g = action.slot_generators(i);
    const Generators w = cartan_image(g);
    const Generators ww = cartan_image(w);
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (!equal<Rational>(ww[a][b], g[a][b])) involution.push_back(Json::array({i + 1, a + 1, b + 1}));
      }
    }
    // The images satisfy the same structure constants.
    if (!relation_violations(w, 1).empty()) automorphism.push_back(i + 1);
  }
  for (int i = 0; i < action.slots(); ++i) {
    for (int j = 0; j < action.slots(); ++j) {
      if (i == j) continue;
      const auto o = omega_tensors(action, i, j);
      const Generators wi = cartan_image(action.slot_generators(i));
      const Generators wj = cartan_image(action.slot_generators(j));
      if (!equal<Rational>(omega_half(wi, wj, true), o.minus) || !equal<Rational>(omega_half(wi, wj, false), o.plus)) {
        swap.push_back(pair_json(i, j));
      }
    }
  }
  if (!involution.empty()) bad["not_involutive"] = involution;
  if (!automorphism.empty()) bad["not_automorphism_on_slots"] = automorphism;
  if (!swap.empty()) bad["omega_halves_not_exchanged"] = swap;
  const bool ok = bad.empty();
  return make_report("gl_rep.cartan", {{"action", action.name()}, {"M", action.rank()}, {"N", action.slots()}}, ok,
                     ok ? Json::object() : bad);
}

CheckReport braid_check(const SlotAction& action) {
  const int n = action.slots();
  std::map<std::pair<int, int>, RationalMatrix> om;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) om.emplace(std::make_pair(i, j), omega_tensors(action, i, j).omega);
    }
  }
  Json bad = Json::array();
  int checked = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const RationalMatrix& oij = om.at({i, j});
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        ++checked;
        if (!is_zero<Rational>(commutator<Rational>(oij, om.at({i, k}) + om.at({j, k})))) {
          bad.push_back({{"relation", "[O_ij, O_ik + O_jk]"}, {"slots", Json::array({i + 1, j + 1, k + 1})}});
        }
        for (int l = k + 1; l < n; ++l) {
          if (l == i || l == j) continue;
          ++checked;
          if (!is_zero<Rational>(commutator(oij, om.at({k, l})))) {
            bad.push_back({{"relation", "[O_ij, O_kl]"}, {"slots", Json::array({i + 1, j + 1, k + 1, l + 1})}});
          }
        }
      }
    }
  }
  const bool ok = bad.empty();
  return make_report("gl_rep.braid", {{"action", action.name()}, {"M", action.rank()}, {"N", n}}, ok,
                     ok ? Json{{"relations_checked", checked}} : Json{{"violations", bad}});
}

std::vector<CheckReport> gl_structure_checks(const TensorContext& ctx) {
  const SlotAction& act = ctx.action();
  std::vector<CheckReport> out{relations_check(act), casimir_centrality_check(act), cartan_automorphism_check(act)};
  if (ctx.size() >= 2) {
    out.push_back(omega_decomposition_check(act));
    out.push_back(omega_casimir_check(act));
    out.push_back(omega_invariance_check(act));
    bool all_vector = true;
    for (const auto& f : ctx.factors()) all_vector = all_vector && f.name() == "vector";
    if (all_vector) out.push_back(omega_flip_check(ctx));
  }
  if (ctx.size() >= 3) out.push_back(braid_check(act));
  return out;
}

}  // namespace defcalc
