#include "defcalc/howe_duality.hpp"

#include <numeric>

#include "defcalc/errors.hpp"
#include "defcalc/sampler.hpp"

namespace defcalc {

namespace {

std::shared_ptr<const SlotAction> row_action(const PolynomialModel& m) {
  std::vector<Generators> gens(static_cast<std::size_t>(m.N()));
  for (int i = 0; i < m.N(); ++i) {
    auto& g = gens[static_cast<std::size_t>(i)];
    g.assign(static_cast<std::size_t>(m.M()), std::vector<RationalMatrix>(static_cast<std::size_t>(m.M())));
    for (int a = 0; a < m.M(); ++a) {
      for (int b = 0; b < m.M(); ++b) {
        g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = m.polarization(m.variable(i, a), m.variable(i, b));
      }
    }
  }
  return std::make_shared<const SlotAction>("gl_M model", m.dim(), std::move(gens));
}

std::shared_ptr<const SlotAction> column_action(const PolynomialModel& m) {
  std::vector<Generators> gens(static_cast<std::size_t>(m.M()));
  for (int a = 0; a < m.M(); ++a) {
    auto& g = gens[static_cast<std::size_t>(a)];
    g.assign(static_cast<std::size_t>(m.N()), std::vector<RationalMatrix>(static_cast<std::size_t>(m.N())));
    for (int i = 0; i < m.N(); ++i) {
      for (int j = 0; j < m.N(); ++j) {
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.polarization(m.variable(i, a), m.variable(j, a));
      }
    }
  }
  return std::make_shared<const SlotAction>("gl_N model", m.dim(), std::move(gens));
}

KZContext context(const PolynomialModel& m, const KZParams& params, ModelSide side) {
  return side == ModelSide::gl_M ? KZContext::standard(m.gl_M_action(), params)
                                 : KZContext::swapped(m.gl_N_action(), params);
}

struct Pairing {
  std::string identification;
  int index;
  DiffOp residual;
};

std::vector<Pairing> residuals(OpKind kind, const PolynomialModel& m, const KZParams& params) {
  const KZContext left = context(m, params, ModelSide::gl_M);
  const KZContext right = context(m, params, ModelSide::gl_N);
  const auto how = Construction::substitution;
  std::vector<Pairing> out;
  for (int i = 0; i < m.N(); ++i) {
    out.push_back({"kz(gl_M) = dd(gl_N)", i, build_kz(kind, i, left, how) - build_dd(kind, i, right, how)});
  }
  for (int a = 0; a < m.M(); ++a) {
    out.push_back({"dd(gl_M) = kz(gl_N)", a, build_dd(kind, a, left, how) - build_kz(kind, a, right, how)});
  }
  return out;
}

// Zero test for one operator. Probabilistic mode evaluates at seeded points.
class ZeroTest {
 public:
  explicit ZeroTest(const CheckMode& mode) : mode_(mode), sampler_(mode.seed) {
    if (!mode.exact && mode.trials < 1) throw InvalidArgument("probabilistic mode needs at least one trial");
  }

  bool operator()(const DiffOp& op) {
    if (mode_.exact || op.is_zero()) return op.is_zero();
    const auto vars = op.variables();
    for (int t = 0; t < mode_.trials; ++t) {
      bool sampled = false;
      for (int attempt = 0; attempt < 100 && !sampled; ++attempt) {
        const Assignment point = sampler_.sample(vars);
        try {
          if (!is_zero(evaluate(op, point))) return false;
          sampled = true;
        } catch (const PoleAtPoint&) {
        }
      }
      if (!sampled) degenerate_ = true;
    }
    return true;
  }

  bool degenerate() const { return degenerate_; }

 private:
  CheckMode mode_;
  PointSampler sampler_;
  bool degenerate_ = false;
};

Json model_params(const PolynomialModel& m, const KZParams& params, const CheckMode& mode) {
  Json j{{"model", m.to_json()}, {"params", params.to_json()}};
  j.update(mode.to_json());
  return j;
}

Json block_json(const DiffOp& op) {
  Json terms = Json::array();
  for (const auto& [d, mat] : op.terms()) terms.push_back({{"derivative", to_string(d)}, {"matrix", to_json(mat)}});
  return terms;
}

}  // namespace

PolynomialModel::PolynomialModel(int N, int M, int degree) : n_(N), m_(M), degree_(degree) {
  if (N < 1 || M < 1) throw InvalidArgument("model needs N, M >= 1");
  if (degree < 0) throw InvalidArgument("model degree must be nonnegative");
  for (int k = 0; k <= degree; ++k) {
    offsets_.push_back(static_cast<Eigen::Index>(basis_.size()));
    for (auto& e : monomials_of_degree(N * M, k)) {
      index_.emplace(e, static_cast<Eigen::Index>(basis_.size()));
      basis_.push_back(std::move(e));
    }
  }
  gl_m_ = row_action(*this);
  gl_n_ = column_action(*this);
}

Eigen::Index PolynomialModel::stratum_dim(int k) const {
  const auto next = k == degree_ ? dim() : stratum_offset(k + 1);
  return next - stratum_offset(k);
}

std::vector<std::string> PolynomialModel::basis_labels() const {
  std::vector<std::string> out;
  for (const auto& e : basis_) {
    std::string s;
    for (int p = 0; p < n_ * m_; ++p) {
      const int k = e[static_cast<std::size_t>(p)];
      if (k == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(p / m_ + 1) + std::to_string(p % m_ + 1);
      if (k > 1) s += "^" + std::to_string(k);
    }
    out.push_back(s.empty() ? "1" : s);
  }
  return out;
}

RationalMatrix PolynomialModel::polarization(int p, int q) const {
  RationalMatrix out = RationalMatrix::Zero(dim(), dim());
  for (Eigen::Index c = 0; c < dim(); ++c) {
    std::vector<int> e = basis_[static_cast<std::size_t>(c)];
    const int k = e[static_cast<std::size_t>(q)];
    if (k == 0) continue;
    --e[static_cast<std::size_t>(q)];
    ++e[static_cast<std::size_t>(p)];
    out(index_.at(e), c) += Rational(k);
  }
  return out;
}

Json PolynomialModel::to_json() const {
  Json strata = Json::array();
  for (int k = 0; k <= degree_; ++k) strata.push_back(stratum_dim(k));
  return {{"N", n_}, {"M", m_}, {"degree", degree_}, {"dim", dim()}, {"strata", strata}};
}

CheckReport model_check(const PolynomialModel& model) {
  const SlotAction& gm = *model.gl_M_action();
  const SlotAction& gn = *model.gl_N_action();
  const CheckReport rm = relations_check(gm), rn = relations_check(gn);
  std::vector<SparseRationalMatrix> row_gens, column_gens;
  for (int a = 0; a < model.M(); ++a) {
    for (int b = 0; b < model.M(); ++b) row_gens.push_back(sparse(gm.coproduct(a, b)));
  }
  for (int i = 0; i < model.N(); ++i) {
    for (int j = 0; j < model.N(); ++j) column_gens.push_back(sparse(gn.coproduct(i, j)));
  }
  Json mixed = Json::array();
  for (int a = 0; a < model.M(); ++a) {
    for (int b = 0; b < model.M(); ++b) {
      for (int i = 0; i < model.N(); ++i) {
        for (int j = 0; j < model.N(); ++j) {
          const auto& x = row_gens[static_cast<std::size_t>(a * model.M() + b)];
          const auto& y = column_gens[static_cast<std::size_t>(i * model.N() + j)];
          if (mixed.size() < 4 && !is_zero(commutator(x, y))) {
            mixed.push_back({{"gl_M", Json::array({a + 1, b + 1})}, {"gl_N", Json::array({i + 1, j + 1})}});
          }
        }
      }
    }
  }
  const bool ok = rm.passed() && rn.passed() && mixed.empty();
  Json witness{{"gl_M_relations", std::string(to_string(rm.status))},
               {"gl_N_relations", std::string(to_string(rn.status))}};
  if (!rm.passed()) witness["gl_M_violations"] = *rm.witness;
  if (!rn.passed()) witness["gl_N_violations"] = *rn.witness;
  if (!mixed.empty()) witness["actions_do_not_commute"] = mixed;
  return make_report("howe_duality.model", {{"model", model.to_json()}}, ok, witness);
}

DiffOp realize_kz_on_model(OpKind kind, int index, const PolynomialModel& model, const KZParams& params,
                           ModelSide side, Construction how) {
  return build_kz(kind, index, context(model, params, side), how);
}

DiffOp realize_dd_on_model(OpKind kind, int index, const PolynomialModel& model, const KZParams& params, bool swapped,
                           Construction how) {
  return build_dd(kind, index, context(model, params, swapped ? ModelSide::gl_N : ModelSide::gl_M), how);
}

DualityReport check_duality(OpKind kind, const PolynomialModel& model, const KZParams& params, const CheckMode& mode) {
  if (model.degree() < 1) throw InvalidArgument("duality check needs model degree >= 1");
  Json p = model_params(model, params, mode);
  p["kind"] = std::string(to_string(kind));

  DualityReport out;
  ZeroTest vanishes(mode);
  Json strata = Json::array();
  Json emitted = Json::array();
  for (const auto& pr : residuals(kind, model, params)) {
    for (int k = 0; k <= model.degree(); ++k) {
      DiffOp block = pr.residual.block(model.stratum_offset(k), model.stratum_dim(k));
      const bool zero = vanishes(block);
      strata.push_back({{"identification", pr.identification}, {"index", pr.index + 1}, {"degree", k},
                        {"status", zero ? "zero" : "nonzero"}});
      if (zero) continue;
      emitted.push_back({{"identification", pr.identification}, {"index", pr.index + 1}, {"degree", k},
                         {"residual", block_json(block)}});
      out.residuals.push_back({pr.identification, pr.index, k, std::move(block)});
    }
  }
  Json witness{{"strata", strata}};
  if (!emitted.empty()) witness["residuals"] = emitted;
  if (vanishes.degenerate() && out.residuals.empty()) {
    out.report = {"howe_duality.residual." + std::string(to_string(kind)), p, Status::degenerate, witness};
  } else {
    out.report = make_report("howe_duality.residual." + std::string(to_string(kind)), p, out.residuals.empty(), witness);
  }
  return out;
}

CheckReport duality_linearity_check(const PolynomialModel& model, const KZParams& params, const CheckMode& mode) {
  const auto rr = residuals(OpKind::r, model, params);
  const auto rt = residuals(OpKind::t, model, params);
  const auto rrt = residuals(OpKind::rt, model, params);
  ZeroTest vanishes(mode);
  Json failures = Json::array();
  int nonzero_r = 0, nonzero_t = 0, nonzero_rt = 0;
  for (std::size_t k = 0; k < rr.size(); ++k) {
    const bool zr = rr[k].residual.is_zero(), zt = rt[k].residual.is_zero(), zrt = rrt[k].residual.is_zero();
    nonzero_r += zr ? 0 : 1;
    nonzero_t += zt ? 0 : 1;
    nonzero_rt += zrt ? 0 : 1;
    const DiffOp gap = rrt[k].residual - (params.hbar * rt[k].residual + params.eta * rr[k].residual);
    const bool linear = vanishes(gap);
    const bool implied = !(zr && zt) || zrt;
    if ((!linear || !implied) && failures.size() < 4) {
      Json f{{"identification", rr[k].identification}, {"index", rr[k].index + 1}};
      if (!linear) f["gap"] = gap.to_json();
      if (!implied) f["rt_residual"] = rrt[k].residual.to_json();
      failures.push_back(std::move(f));
    }
  }
  const int pairs = static_cast<int>(rr.size());
  Json witness{{"operator_pairs", pairs},
               {"nonzero_residuals", {{"r", nonzero_r}, {"t", nonzero_t}, {"rt", nonzero_rt}}}};
  if (!failures.empty()) witness["failures"] = failures;
  if (failures.empty() && vanishes.degenerate()) {
    return {"howe_duality.linearity", model_params(model, params, mode), Status::degenerate, witness};
  }
  return make_report("howe_duality.linearity", model_params(model, params, mode), failures.empty(), witness);
}

CheckReport block_diagonal_check(const PolynomialModel& model, const KZParams& params) {
  std::vector<int> deg;
  for (const auto& e : model.basis()) deg.push_back(std::accumulate(e.begin(), e.end(), 0));
  Json bad = Json::array();
  int checked = 0;
  auto inspect = [&](const DiffOp& op, Json label) {
    ++checked;
    for (const auto& [d, mat] : op.terms()) {
      for (Eigen::Index c = 0; c < mat.cols(); ++c) {
        for (Eigen::Index r = 0; r < mat.rows(); ++r) {
          if (deg[static_cast<std::size_t>(r)] != deg[static_cast<std::size_t>(c)] && !mat(r, c).is_zero()) {
            if (bad.size() < 4) bad.push_back({{"operator", label}, {"row", r + 1}, {"column", c + 1}});
          }
        }
      }
    }
  };
  for (auto kind : {OpKind::r, OpKind::t, OpKind::rt}) {
    const std::string k(to_string(kind));
    for (int i = 0; i < model.N(); ++i) {
      inspect(realize_kz_on_model(kind, i, model, params), {{"kz", "gl_M"}, {"kind", k}, {"index", i + 1}});
      inspect(realize_dd_on_model(kind, i, model, params, true), {{"dd", "gl_N"}, {"kind", k}, {"index", i + 1}});
    }
    for (int a = 0; a < model.M(); ++a) {
      inspect(realize_dd_on_model(kind, a, model, params, false), {{"dd", "gl_M"}, {"kind", k}, {"index", a + 1}});
      inspect(realize_kz_on_model(kind, a, model, params, ModelSide::gl_N), {{"kz", "gl_N"}, {"kind", k}, {"index", a + 1}});
    }
  }
  return make_report("howe_duality.block_diagonal", {{"model", model.to_json()}, {"params", params.to_json()}},
                     bad.empty(), bad.empty() ? Json{{"operators_checked", checked}} : Json{{"off_block", bad}});
}

}  // namespace defcalc
