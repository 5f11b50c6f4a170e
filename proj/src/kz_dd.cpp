#include "defcalc/kz_dd.hpp"

#include <functional>

#include "defcalc/errors.hpp"
#include "defcalc/sampler.hpp"

namespace defcalc {

namespace {

RationalMatrix zero(Eigen::Index n) { return RationalMatrix::Zero(n, n); }

void check_site(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw IndexOutOfRange(std::string(what) + " " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
  }
}

DiffOp kz_rational(int i, const KZContext& ctx) {
  const SlotAction& act = ctx.action();
  DiffOp op = DiffOp::partial(ctx.positions()[static_cast<std::size_t>(i)], ctx.params().kappa, ctx.dim());
  for (int a = 0; a < ctx.rank(); ++a) op.add({}, -ctx.dynamical(a), act.at(a, a, i));
  for (int j = 0; j < ctx.slots(); ++j) {
    if (j == i) continue;
    op.add({}, RatFunc(-1) / (ctx.position(i) - ctx.position(j)), omega_tensors(act, i, j).omega);
  }
  return op;
}

DiffOp kz_trigonometric(int i, const KZContext& ctx) {
  const SlotAction& act = ctx.action();
  const RatFunc zi = ctx.position(i);
  DiffOp op = DiffOp::partial(ctx.positions()[static_cast<std::size_t>(i)], ctx.params().kappa * zi, ctx.dim());
  RationalMatrix cartan = zero(ctx.dim());
  for (int a = 0; a < ctx.rank(); ++a) {
    op.add({}, -ctx.dynamical(a), act.at(a, a, i));
    cartan += product(act.coproduct(a, a), act.at(a, a, i));
  }
  op.add({}, RatFunc(1), cartan);
  for (int j = 0; j < ctx.slots(); ++j) {
    if (j == i) continue;
    const auto o = omega_tensors(act, i, j);
    const RatFunc den = zi - ctx.position(j);
    op.add({}, -zi / den, o.plus);
    op.add({}, -ctx.position(j) / den, o.minus);
  }
  return op;
}

// e_ab e_ba - e_aa on the coproduct.
RationalMatrix dynamical_pair(const SlotAction& act, int a, int b) {
  return product(act.coproduct(a, b), act.coproduct(b, a)) - act.coproduct(a, a);
}

DiffOp dd_rational(int a, const KZContext& ctx) {
  const SlotAction& act = ctx.action();
  DiffOp op = DiffOp::partial(ctx.dynamicals()[static_cast<std::size_t>(a)], ctx.params().kappa, ctx.dim());
  for (int i = 0; i < ctx.slots(); ++i) op.add({}, -ctx.position(i), act.at(a, a, i));
  for (int b = 0; b < ctx.rank(); ++b) {
    if (b == a) continue;
    op.add({}, RatFunc(-1) / (ctx.dynamical(a) - ctx.dynamical(b)), dynamical_pair(act, a, b));
  }
  return op;
}

DiffOp dd_trigonometric(int a, const KZContext& ctx) {
  const SlotAction& act = ctx.action();
  const RatFunc la = ctx.dynamical(a);
  DiffOp op = DiffOp::partial(ctx.dynamicals()[static_cast<std::size_t>(a)], ctx.params().kappa * la, ctx.dim());
  RationalMatrix constant = product(act.coproduct(a, a), act.coproduct(a, a)) * Rational(1, 2);
  for (int b = 0; b < ctx.rank(); ++b) {
    for (int i = 0; i < ctx.slots(); ++i) {
      for (int j = i + 1; j < ctx.slots(); ++j) constant -= product(act.at(a, b, i), act.at(b, a, j));
    }
  }
  op.add({}, RatFunc(1), constant);
  for (int i = 0; i < ctx.slots(); ++i) op.add({}, -ctx.position(i), act.at(a, a, i));
  for (int b = 0; b < ctx.rank(); ++b) {
    if (b == a) continue;
    op.add({}, -ctx.dynamical(b) / (la - ctx.dynamical(b)), dynamical_pair(act, a, b));
  }
  return op;
}

DiffOp shift_and_scale(const DiffOp& op, const KZContext& ctx, const std::vector<std::string>& shifted,
                       const std::vector<std::string>& scaled_vars) {
  const KZParams& p = ctx.params();
  const RatFunc c = p.eta / p.hbar;
  DiffOp out = op;
  for (const auto& v : shifted) out = out.substitute(v, RatFunc::symbol(v) + c);
  for (const auto& v : scaled_vars) out = out.substitute(v, (RatFunc(1) + c) * RatFunc::symbol(v));
  return p.hbar * out;
}

// One operator expected to vanish, available both symbolically and pointwise.
struct Probe {
  Json label;
  std::function<DiffOp()> exact;
  std::function<EvaluatedOp(const Assignment&)> at;
  std::set<std::string, SymbolLess> vars;
};

Probe difference_probe(Json label, DiffOp a, DiffOp b) {
  auto vars = a.variables();
  auto vb = b.variables();
  vars.insert(vb.begin(), vb.end());
  auto diff = std::make_shared<DiffOp>(a - b);
  return {std::move(label), [diff] { return *diff; }, [diff](const Assignment& p) { return evaluate(*diff, p); },
          std::move(vars)};
}

Probe commutator_probe(Json label, const DiffOp& a, const DiffOp& b) {
  auto vars = a.variables();
  auto vb = b.variables();
  vars.insert(vb.begin(), vb.end());
  auto pa = std::make_shared<DiffOp>(a), pb = std::make_shared<DiffOp>(b);
  return {std::move(label), [pa, pb] { return commutator(*pa, *pb); },
          [pa, pb](const Assignment& p) { return commutator_at(*pa, *pb, p); }, std::move(vars)};
}

CheckReport run_probes(std::string name, Json params, const std::vector<Probe>& probes, const CheckMode& mode) {
  if (mode.exact) {
    for (const auto& p : probes) {
      const DiffOp r = p.exact();
      if (!r.is_zero()) {
        return make_report(std::move(name), std::move(params), false, {{"operator", p.label}, {"residual", r.to_json()}});
      }
    }
    return make_report(std::move(name), std::move(params), true, {{"operators_checked", probes.size()}});
  }
  if (mode.trials < 1) throw InvalidArgument("probabilistic mode needs at least one trial");
  std::set<std::string, SymbolLess> vars;
  for (const auto& p : probes) vars.insert(p.vars.begin(), p.vars.end());
  PointSampler sampler(mode.seed);
  for (int t = 0; t < mode.trials; ++t) {
    bool sampled = false;
    for (int attempt = 0; attempt < 100 && !sampled; ++attempt) {
      const Assignment point = sampler.sample(vars);
      std::vector<EvaluatedOp> values;
      try {
        for (const auto& p : probes) values.push_back(p.at(point));
      } catch (const PoleAtPoint&) {
        continue;
      }
      sampled = true;
      for (std::size_t k = 0; k < probes.size(); ++k) {
        if (!is_zero(values[k])) {
          return make_report(std::move(name), std::move(params), false,
                             {{"operator", probes[k].label}, {"trial", t}, {"point", point_json(point)},
                              {"value", to_json(values[k])}});
        }
      }
    }
    if (!sampled) {
      CheckReport r{std::move(name), std::move(params), Status::degenerate,
                    Json{{"reason", "no pole-free sample point found in 100 attempts"}, {"trial", t}}};
      return r;
    }
  }
  return make_report(std::move(name), std::move(params), true,
                     {{"operators_checked", probes.size()}, {"trials", mode.trials}});
}

}  // namespace

std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::r: return "r";
    case OpKind::t: return "t";
    case OpKind::rt: return "rt";
  }
  return "?";
}

OpKind parse_op_kind(std::string_view s) {
  if (s == "r") return OpKind::r;
  if (s == "t") return OpKind::t;
  if (s == "rt") return OpKind::rt;
  throw InvalidArgument("unknown operator kind '" + std::string(s) + "' (expected r, t or rt)");
}

std::string_view to_string(Identity w) {
  switch (w) {
    case Identity::eq30: return "eq30";
    case Identity::eq35: return "eq35";
    case Identity::flatness: return "flatness";
    case Identity::compat: return "compat";
  }
  return "?";
}

Identity parse_identity(std::string_view s) {
  if (s == "eq30") return Identity::eq30;
  if (s == "eq35") return Identity::eq35;
  if (s == "flatness") return Identity::flatness;
  if (s == "compat") return Identity::compat;
  throw InvalidArgument("unknown identity '" + std::string(s) + "' (expected eq30, eq35, flatness or compat)");
}

Json KZParams::to_json() const {
  return {{"kappa", kappa.to_string()}, {"hbar", hbar.to_string()}, {"eta", eta.to_string()}};
}

Json CheckMode::to_json() const {
  if (exact) return {{"mode", "exact"}};
  return {{"mode", "probabilistic"}, {"seed", seed}, {"trials", trials}};
}

KZContext::KZContext(std::shared_ptr<const SlotAction> action, std::vector<std::string> positions,
                     std::vector<std::string> dynamicals, KZParams params)
    : action_(std::move(action)), positions_(std::move(positions)), dynamicals_(std::move(dynamicals)),
      params_(std::move(params)) {
  if (params_.kappa.is_zero()) throw InvalidArgument("kappa must be nonzero");
  if (params_.hbar.is_zero()) throw InvalidArgument("hbar must be nonzero");
  if (static_cast<int>(positions_.size()) != action_->slots()) throw InvalidArgument("need one position per slot");
  if (static_cast<int>(dynamicals_.size()) != action_->rank()) throw InvalidArgument("need one dynamical per gl index");
  for (int a = 0; a < rank(); ++a) {
    for (int i = 0; i < slots(); ++i) {
      if (!is_zero<Rational>(commutator(action_->coproduct(a, a), action_->at(a, a, i)))) {
        throw InvalidArgument("Delta(e_aa) and (e_aa)_(i) do not commute for a = " + std::to_string(a + 1) +
                              ", i = " + std::to_string(i + 1));
      }
    }
  }
}

namespace {

std::vector<std::string> numbered(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

}  // namespace

KZContext KZContext::standard(std::shared_ptr<const SlotAction> action, KZParams params) {
  const int n = action->slots(), m = action->rank();
  return {std::move(action), numbered("z", n), numbered("lambda", m), std::move(params)};
}

KZContext KZContext::swapped(std::shared_ptr<const SlotAction> action, KZParams params) {
  const int n = action->slots(), m = action->rank();
  return {std::move(action), numbered("lambda", n), numbered("z", m), std::move(params)};
}

KZContext KZContext::from_tensor(const TensorContext& ctx, KZParams params) {
  return standard(std::make_shared<const SlotAction>(ctx.action()), std::move(params));
}

Json KZContext::to_json() const {
  return {{"action", action_->name()}, {"M", rank()}, {"N", slots()}, {"params", params_.to_json()}};
}

DiffOp build_kz(OpKind kind, int i, const KZContext& ctx, Construction how) {
  check_site(i, ctx.slots(), "site");
  switch (kind) {
    case OpKind::r: return kz_rational(i, ctx);
    case OpKind::t: return kz_trigonometric(i, ctx);
    case OpKind::rt:
      if (how == Construction::substitution) {
        return shift_and_scale(kz_trigonometric(i, ctx), ctx, ctx.positions(), ctx.dynamicals());
      }
      return ctx.params().hbar * kz_trigonometric(i, ctx) + ctx.params().eta * kz_rational(i, ctx);
  }
  throw InvalidArgument("unknown operator kind");
}

DiffOp build_dd(OpKind kind, int a, const KZContext& ctx, Construction how) {
  check_site(a, ctx.rank(), "dynamical index");
  switch (kind) {
    case OpKind::r: return dd_rational(a, ctx);
    case OpKind::t: return dd_trigonometric(a, ctx);
    case OpKind::rt:
      if (how == Construction::substitution) {
        return shift_and_scale(dd_trigonometric(a, ctx), ctx, ctx.dynamicals(), ctx.positions());
      }
      return ctx.params().hbar * dd_trigonometric(a, ctx) + ctx.params().eta * dd_rational(a, ctx);
  }
  throw InvalidArgument("unknown operator kind");
}

CheckReport check_identity(Identity which, OpKind kind, const KZContext& ctx, const CheckMode& mode) {
  if (which == Identity::eq30 || which == Identity::eq35) kind = OpKind::rt;
  Json params = ctx.to_json();
  params["identity"] = std::string(to_string(which));
  params["kind"] = std::string(to_string(kind));
  params.update(mode.to_json());
  std::string name = "kz_dd." + std::string(to_string(which));
  if (which == Identity::flatness || which == Identity::compat) name += "." + std::string(to_string(kind));

  std::vector<Probe> probes;
  const int n = ctx.slots(), m = ctx.rank();
  switch (which) {
    case Identity::eq30:
      for (int i = 0; i < n; ++i) {
        probes.push_back(difference_probe({{"kz_site", i + 1}}, build_kz(OpKind::rt, i, ctx, Construction::substitution),
                                          build_kz(OpKind::rt, i, ctx, Construction::direct)));
      }
      break;
    case Identity::eq35:
      for (int a = 0; a < m; ++a) {
        probes.push_back(difference_probe({{"dd_index", a + 1}}, build_dd(OpKind::rt, a, ctx, Construction::substitution),
                                          build_dd(OpKind::rt, a, ctx, Construction::direct)));
      }
      break;
    case Identity::flatness: {
      std::vector<DiffOp> kz, dd;
      for (int i = 0; i < n; ++i) kz.push_back(build_kz(kind, i, ctx));
      for (int a = 0; a < m; ++a) dd.push_back(build_dd(kind, a, ctx));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          probes.push_back(commutator_probe({{"kz_sites", Json::array({i + 1, j + 1})}}, kz[static_cast<std::size_t>(i)],
                                            kz[static_cast<std::size_t>(j)]));
        }
      }
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          probes.push_back(commutator_probe({{"dd_indices", Json::array({a + 1, b + 1})}},
                                            dd[static_cast<std::size_t>(a)], dd[static_cast<std::size_t>(b)]));
        }
      }
      break;
    }
    case Identity::compat: {
      std::vector<DiffOp> dd;
      for (int a = 0; a < m; ++a) dd.push_back(build_dd(kind, a, ctx));
      for (int i = 0; i < n; ++i) {
        const DiffOp kz = build_kz(kind, i, ctx);
        for (int a = 0; a < m; ++a) {
          probes.push_back(commutator_probe({{"kz_site", i + 1}, {"dd_index", a + 1}}, kz, dd[static_cast<std::size_t>(a)]));
        }
      }
      break;
    }
  }
  return run_probes(std::move(name), std::move(params), probes, mode);
}

}  // namespace defcalc
