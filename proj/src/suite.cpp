#include "defcalc/suite.hpp"

#include <algorithm>
#include <random>

#include "defcalc/deformed_calculus.hpp"
#include "defcalc/deformed_functions.hpp"
#include "defcalc/deformed_numbers.hpp"
#include "defcalc/errors.hpp"
#include "defcalc/gl_rep.hpp"
#include "defcalc/howe_duality.hpp"
#include "defcalc/kz_dd.hpp"
#include "defcalc/quantum_plane.hpp"

namespace defcalc {

namespace {

constexpr DeformedKind kAllKinds[] = {DeformedKind::classical, DeformedKind::q, DeformedKind::eta,
                                      DeformedKind::q_eta};

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

std::vector<CheckReport> number_checks() {
  std::vector<CheckReport> out;
  for (long z = -6; z <= 6; ++z) out.push_back(specialize_number(z));

  Json bad = Json::array();
  for (auto kind : kAllKinds) {
    if (!deformed_number(0, kind).is_zero() || !(deformed_number(1, kind) == RatFunc(1))) {
      bad.push_back(std::string(to_string(kind)));
    }
  }
  out.push_back(make_report("deformed_numbers.fixed_points", Json::object(), bad.empty(),
                            bad.empty() ? Json{{"kinds_checked", 4}} : Json{{"kinds", bad}}));

  bad = Json::array();
  for (auto kind : kAllKinds) {
    for (long n = 1; n <= 8; ++n) {
      if (!(deformed_factorial(n, kind) / deformed_factorial(n - 1, kind) == deformed_number(n, kind))) {
        bad.push_back({{"kind", std::string(to_string(kind))}, {"n", n}});
      }
    }
  }
  out.push_back(make_report("deformed_numbers.factorial_ratio", {{"n_max", 8}}, bad.empty(),
                            bad.empty() ? Json{{"cases_checked", 32}} : Json{{"failures", bad}}));
  return out;
}

// Portable draws: raw 64-bit output reduced by hand.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long below(long n) { return static_cast<long>(rng_() % static_cast<std::uint64_t>(n)); }
  Rational rational() { return Rational(below(41) - 20, below(9) + 1); }
  UniPoly poly(int max_degree) {
    std::vector<RatFunc> c;
    const long deg = below(max_degree + 1);
    for (long k = 0; k <= deg; ++k) c.emplace_back(rational());
    return UniPoly(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<CheckReport> calculus_checks(std::uint64_t seed) {
  std::vector<CheckReport> out;
  const std::pair<const char*, ShiftMap> maps[] = {
      {"q", ShiftMap::q_shift()}, {"eta", ShiftMap::eta_shift()}, {"q_eta", ShiftMap::q_eta_shift()}};
  Draw draw(seed);
  for (const auto& [label, s] : maps) {
    const std::string name = std::string("deformed_calculus.leibniz.") + label;
    Json params{{"shift_map", s.to_json()}, {"pairs", 100}, {"max_degree", 6}, {"seed", seed}};
    CheckReport agg = make_report(name, params, true, {{"pairs_checked", 100}});
    for (int k = 0; k < 100; ++k) {
      const UniPoly f = draw.poly(6), g = draw.poly(6);
      CheckReport r = check_leibniz(f, g, s);
      if (!r.passed()) {
        agg = make_report(name, params, false, {{"pair", k}, {"f", f.to_string()}, {"g", g.to_string()}, {"check", *r.witness}});
        break;
      }
    }
    out.push_back(std::move(agg));
  }

  Json bad = Json::array();
  const RatFunc q = RatFunc::symbol("q"), eta = RatFunc::symbol("eta");
  for (int n = 1; n <= 10; ++n) {
    const UniPoly got = apply_difference_operator(UniPoly::monomial(n), ShiftMap::q_shift());
    if (!(got == UniPoly::monomial(n - 1, deformed_number(n, DeformedKind::q)))) {
      bad.push_back({{"n", n}, {"derivative", got.to_string()}});
    }
  }
  const UniPoly x2 = apply_difference_operator(UniPoly::monomial(2), ShiftMap::q_eta_shift());
  const UniPoly expected = UniPoly::monomial(1, RatFunc(1) + q) + UniPoly::monomial(0, eta);
  if (!(x2 == expected)) bad.push_back({{"q_eta_square", x2.to_string()}});
  out.push_back(make_report("deformed_calculus.monomial_law", {{"n_max", 10}}, bad.empty(),
                            bad.empty() ? Json{{"q_eta_square", x2.to_string()}} : Json{{"failures", bad}}));
  return out;
}

std::vector<CheckReport> series_checks(int order) {
  std::vector<CheckReport> out;
  out.push_back(specialize_series({{}, {}, DeformedKind::q_eta, order}, DeformedKind::q));
  out.push_back(specialize_series({{}, {}, DeformedKind::q_eta, order}, DeformedKind::eta));
  const std::vector<std::pair<std::vector<long>, std::vector<long>>> sets{{{2}, {3}}, {{1, 3}, {2}}, {{2, 2}, {3, 4}}};
  for (const auto& [a, b] : sets) out.push_back(specialize_series({a, b, DeformedKind::q_eta, 8}, DeformedKind::eta));
  return out;
}

std::vector<CheckReport> plane_checks(std::uint64_t seed) {
  const auto words = random_words(seed, 200, 8);
  CheckReport c = confluence_check(words);
  CheckReport s = specialization_check(words);
  c.parameters["seed"] = seed;
  s.parameters["seed"] = seed;
  return {std::move(c), std::move(s), solve_functional_equation({}, 6)};
}

std::vector<CheckReport> gl_checks() {
  std::vector<CheckReport> out;
  for (int m = 1; m <= 4; ++m) {
    auto checks = gl_structure_checks(TensorContext::uniform(vector_rep(m), 2));
    for (auto& r : checks) r.parameters["M"] = m;
    append(out, std::move(checks));
  }
  CheckReport braid = braid_check(TensorContext::uniform(vector_rep(2), 4).action());
  braid.parameters["M"] = 2;
  braid.parameters["N"] = 4;
  out.push_back(std::move(braid));
  return out;
}

std::vector<CheckReport> kz_checks(const SuiteConfig& cfg) {
  std::vector<CheckReport> out;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const auto ctx = KZContext::from_tensor(TensorContext::uniform(vector_rep(m), n));
      out.push_back(check_identity(Identity::eq30, OpKind::rt, ctx));
      out.push_back(check_identity(Identity::eq35, OpKind::rt, ctx));
    }
  }
  const auto sym = KZContext::from_tensor(TensorContext({symmetric_power_rep(2, 2), vector_rep(2)}));
  for (auto which : {Identity::eq30, Identity::eq35}) {
    CheckReport r = check_identity(which, OpKind::rt, sym);
    r.parameters["modules"] = Json::array({"sym:2", "vector"});
    out.push_back(std::move(r));
  }
  const auto ctx = KZContext::from_tensor(TensorContext::uniform(vector_rep(cfg.M), cfg.N));
  const CheckMode mode = cfg.exact ? CheckMode{} : CheckMode::probabilistic(cfg.seed, cfg.trials);
  for (auto kind : {OpKind::r, OpKind::t, OpKind::rt}) out.push_back(check_identity(Identity::flatness, kind, ctx, mode));
  out.push_back(check_identity(Identity::compat, OpKind::r, ctx, mode));
  return out;
}

std::vector<CheckReport> duality_checks(int degree) {
  std::vector<CheckReport> out;
  for (int m = 1; m <= 3; ++m) out.push_back(check_duality(OpKind::r, PolynomialModel(1, m, degree)).report);
  const PolynomialModel square(2, 2, degree);
  out.push_back(model_check(square));
  out.push_back(block_diagonal_check(square));
  out.push_back(check_duality(OpKind::r, square).report);
  for (const auto& model : {PolynomialModel(1, 3, degree), square}) {
    CheckReport lin = duality_linearity_check(model);
    // Residuals are part of the data whatever their value.
    Json residuals = Json::object();
    for (auto kind : {OpKind::t, OpKind::rt}) {
      const DualityReport d = check_duality(kind, model);
      residuals[std::string(to_string(kind))] = {{"status", std::string(to_string(d.report.status))},
                                                 {"report", *d.report.witness}};
    }
    (*lin.witness)["residuals"] = std::move(residuals);
    out.push_back(std::move(lin));
  }
  return out;
}

}  // namespace

void SuiteConfig::validate() const {
  if (M < 1 || M > 4 || N < 1 || N > 4) throw InvalidArgument("suite needs 1 <= M, N <= 4");
  if (order < 0 || order > 16) throw InvalidArgument("suite series order must lie in [0, 16]");
  if (degree < 1 || degree > 4) throw InvalidArgument("suite model degree must lie in [1, 4]");
  if (trials < 1) throw InvalidArgument("suite needs at least one trial");
  for (const auto& g : groups) {
    if (std::find(kSuiteGroups.begin(), kSuiteGroups.end(), g) == kSuiteGroups.end()) {
      throw InvalidArgument("unknown check group '" + g + "'");
    }
  }
}

Json SuiteConfig::to_json() const {
  Json g = Json::array();
  for (const auto& name : groups.empty() ? kSuiteGroups : groups) g.push_back(name);
  return {{"groups", g},  {"M", M},           {"N", N},           {"degree", degree},
          {"order", order}, {"seed", seed},     {"trials", trials}, {"mode", exact ? "exact" : "probabilistic"}};
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  config.validate();
  auto selected = [&](const std::string& g) {
    return config.groups.empty() || std::find(config.groups.begin(), config.groups.end(), g) != config.groups.end();
  };
  std::vector<CheckReport> out;
  if (selected("numbers")) append(out, number_checks());
  if (selected("calculus")) append(out, calculus_checks(config.seed));
  if (selected("series")) append(out, series_checks(config.order));
  if (selected("plane")) append(out, plane_checks(config.seed));
  if (selected("gl")) append(out, gl_checks());
  if (selected("kz")) append(out, kz_checks(config));
  if (selected("duality")) append(out, duality_checks(config.degree));
  return out;
}

}  // namespace defcalc
