#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "defcalc/deformed_calculus.hpp"
#include "defcalc/deformed_functions.hpp"
#include "defcalc/deformed_numbers.hpp"
#include "defcalc/errors.hpp"
#include "defcalc/gl_rep.hpp"
#include "defcalc/howe_duality.hpp"
#include "defcalc/kz_dd.hpp"
#include "defcalc/quantum_plane.hpp"
#include "defcalc/suite.hpp"

namespace {

using namespace defcalc;

constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Rational literal, or one of the parameter symbols.
RatFunc parse_scalar(const std::string& text) {
  if (text == "q" || text == "eta" || text == "hbar" || text == "kappa") return RatFunc::symbol(text);
  return RatFunc(Rational::parse(text));
}

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw InvalidArgument("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

Assignment parse_point(const std::string& text) {
  Assignment point;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected name=value in '" + item + "'");
    point[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
  }
  return point;
}

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = std::string(kSchema);
  j["command"] = command;
  return j;
}

int emit(const Json& j) {
  std::cout << j.dump(2) << '\n';
  return j.value("status", "fail") == "pass" ? 0 : kFailed;
}

int emit_checks(const std::string& command, std::vector<CheckReport> reports, const Json& config = Json()) {
  Json out = envelope(command);
  out.update(emit_report(std::move(reports), config));
  return emit(out);
}

struct Flags {
  // shared
  std::string kind;
  std::string q = "q", eta = "eta", kappa = "kappa", hbar = "hbar";
  int M = 2, N = 2;
  std::string module = "vector";
  std::uint64_t seed = 7;
  int trials = 5;
  bool exact = false;
  // num
  long z = 0;
  // series
  int order = 8;
  std::string a, b;
  std::string specialize;
  // diffop
  std::string poly, scale = "q", shift = "eta";
  // plane
  std::string word, strategy = "leftmost";
  int degree = 6;
  // kz
  std::string family = "kz", construction = "direct", eval, which;
  int site = 1;
  // suite
  bool all = false;
  std::string only;
};

DeformationParams deformation(const Flags& f) { return {parse_scalar(f.q), parse_scalar(f.eta)}; }
KZParams kz_params(const Flags& f) { return {parse_scalar(f.kappa), parse_scalar(f.hbar), parse_scalar(f.eta)}; }

// Exact by default up to (2, 2); seeded point evaluation above that.
CheckMode check_mode(const Flags& f, int M, int N) {
  if (f.exact || (M <= 2 && N <= 2)) return CheckMode{};
  return CheckMode::probabilistic(f.seed, f.trials);
}

int run_num(const Flags& f) {
  Json out = envelope("num");
  const DeformedKind kind = parse_kind(f.kind);
  const DeformationParams p = deformation(f);
  out["input"] = {{"kind", std::string(to_string(kind))}, {"z", f.z}, {"q", p.q.to_string()}, {"eta", p.eta.to_string()}};
  try {
    out["value"] = deformed_number(f.z, kind, p).to_string();
    out["status"] = "pass";
  } catch (const DenominatorVanishes& e) {
    out["status"] = "degenerate";
    out["reason"] = e.what();
  }
  return emit(out);
}

int run_series(const Flags& f, bool hyp) {
  Json out = envelope(hyp ? "series hyp" : "series exp");
  SeriesSpec spec{hyp ? parse_int_list(f.a) : std::vector<long>{}, hyp ? parse_int_list(f.b) : std::vector<long>{},
                  parse_kind(f.kind), f.order};
  const DeformationParams p = deformation(f);
  out["input"] = spec.to_json();
  out["input"]["q"] = p.q.to_string();
  out["input"]["eta"] = p.eta.to_string();
  try {
    out["coefficients"] = to_json(hyp ? hypergeometric_series(spec, p) : exp_series(spec.kind, p, spec.order));
    out["status"] = "pass";
  } catch (const Error& e) {
    out["status"] = "degenerate";
    out["reason"] = e.what();
    return emit(out);
  }
  if (!f.specialize.empty()) {
    const CheckReport r = specialize_series(spec, parse_kind(f.specialize));
    out["check"] = r.to_json();
    out["status"] = std::string(to_string(r.status));
  }
  return emit(out);
}

int run_diffop(const Flags& f) {
  Json out = envelope("diffop");
  std::vector<RatFunc> coeffs;
  std::stringstream in(f.poly);
  std::string item;
  while (std::getline(in, item, ',')) coeffs.push_back(parse_scalar(item));
  const UniPoly poly(std::move(coeffs));
  const ShiftMap s(parse_scalar(f.scale), parse_scalar(f.shift));
  out["input"] = {{"poly", poly.to_string()}, {"shift_map", s.to_json()}};
  const UniPoly d = apply_difference_operator(poly, s);
  out["output"] = d.to_json();
  const CheckReport leibniz = check_leibniz(poly, poly, s);
  out["leibniz"] = std::string(to_string(leibniz.status));
  if (!leibniz.passed()) out["leibniz_witness"] = *leibniz.witness;
  out["status"] = std::string(to_string(leibniz.status));
  return emit(out);
}

int run_normal_order(const Flags& f) {
  Json out = envelope("plane normal-order");
  const DeformationParams p = deformation(f);
  if (f.strategy != "leftmost" && f.strategy != "rightmost") throw InvalidArgument("strategy is leftmost or rightmost");
  const auto strategy = f.strategy == "leftmost" ? RewriteStrategy::leftmost : RewriteStrategy::rightmost;
  out["input"] = {{"word", f.word}, {"q", p.q.to_string()}, {"eta", p.eta.to_string()}, {"strategy", f.strategy}};
  const PlanePolynomial nf = normal_order(f.word, p, strategy);
  out["normal_form"] = nf.to_string();
  out["terms"] = nf.to_json();
  out["status"] = "pass";
  return emit(out);
}

int run_funceq(const Flags& f) {
  if (f.degree < 1) throw InvalidArgument("degree must be at least 1");
  return emit_checks("plane funceq", {solve_functional_equation(deformation(f), f.degree)});
}

TensorContext tensor(const Flags& f) {
  if (f.M < 1 || f.N < 1) throw InvalidArgument("M and N must be positive");
  return TensorContext::uniform(parse_module(f.module, f.M), f.N);
}

int run_gl(const Flags& f) {
  const TensorContext ctx = tensor(f);
  auto reports = gl_structure_checks(ctx);
  for (auto& r : reports) r.parameters["context"] = ctx.to_json();
  return emit_checks("gl check", std::move(reports));
}

int run_kz_build(const Flags& f) {
  Json out = envelope("kz build");
  const TensorContext t = tensor(f);
  const KZContext ctx = KZContext::from_tensor(t, kz_params(f));
  const OpKind kind = parse_op_kind(f.kind);
  if (f.construction != "direct" && f.construction != "substitution") {
    throw InvalidArgument("construction is direct or substitution");
  }
  const auto how = f.construction == "direct" ? Construction::direct : Construction::substitution;
  if (f.family != "kz" && f.family != "dd") throw InvalidArgument("operator family is kz or dd");
  const DiffOp op = f.family == "kz" ? build_kz(kind, f.site - 1, ctx, how) : build_dd(kind, f.site - 1, ctx, how);
  out["input"] = {{"family", f.family}, {"kind", std::string(to_string(kind))}, {"site", f.site},
                  {"construction", f.construction}, {"context", ctx.to_json()}, {"modules", t.to_json()["factors"]}};
  if (f.eval.empty()) {
    out["operator"] = op.to_json();
  } else {
    const Assignment point = parse_point(f.eval);
    out["point"] = f.eval;
    try {
      out["operator"] = to_json(evaluate(op, point));
    } catch (const PoleAtPoint& e) {
      out["status"] = "degenerate";
      out["reason"] = e.what();
      return emit(out);
    }
  }
  out["status"] = "pass";
  return emit(out);
}

int run_kz_check(const Flags& f) {
  const KZContext ctx = KZContext::from_tensor(tensor(f), kz_params(f));
  CheckReport r = check_identity(parse_identity(f.which), parse_op_kind(f.kind), ctx, check_mode(f, f.M, f.N));
  r.parameters["module"] = f.module;
  return emit_checks("kz check", {std::move(r)});
}

int run_duality(const Flags& f) {
  const PolynomialModel model(f.N, f.M, f.degree);
  const OpKind kind = parse_op_kind(f.kind);
  const CheckMode mode = check_mode(f, f.M, f.N);
  const KZParams params = kz_params(f);
  std::vector<CheckReport> reports{check_duality(kind, model, params, mode).report};
  if (kind == OpKind::rt) reports.push_back(duality_linearity_check(model, params, mode));
  return emit_checks("duality", std::move(reports));
}

int run_suite_command(const Flags& f, const CLI::App& sub) {
  SuiteConfig cfg;
  if (!f.all && f.only.empty()) throw InvalidArgument("suite needs --all or --only");
  if (!f.only.empty()) {
    std::stringstream in(f.only);
    std::string g;
    while (std::getline(in, g, ',')) cfg.groups.push_back(g);
  }
  if (sub.count("--M") > 0) cfg.M = f.M;
  if (sub.count("--N") > 0) cfg.N = f.N;
  if (sub.count("--degree") > 0) cfg.degree = f.degree;
  if (sub.count("--order") > 0) cfg.order = f.order;
  cfg.seed = f.seed;
  cfg.trials = f.trials;
  cfg.exact = f.exact;
  cfg.validate();
  return emit_checks("suite", run_suite(cfg), cfg.to_json());
}

void add_deformation(CLI::App* app, Flags& f) {
  app->add_option("--q", f.q, "rational value or the symbol q");
  app->add_option("--eta", f.eta, "rational value or the symbol eta");
}

void add_context(CLI::App* app, Flags& f) {
  app->add_option("--M", f.M, "rank of gl_M");
  app->add_option("--N", f.N, "number of tensor factors");
  app->add_option("--module", f.module, "vector or sym:k");
  app->add_option("--kappa", f.kappa, "rational value or the symbol kappa");
  app->add_option("--hbar", f.hbar, "rational value or the symbol hbar");
  app->add_option("--eta", f.eta, "rational value or the symbol eta");
}

void add_sampling(CLI::App* app, Flags& f) {
  app->add_option("--seed", f.seed, "seed for point sampling");
  app->add_option("--trials", f.trials, "sample points per check");
  app->add_flag("--exact", f.exact, "exact symbolic comparison");
}

Json usage_error(const std::string& message) {
  Json j = envelope("usage");
  j["status"] = "error";
  j["error"] = message;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of deformed numbers, KZ/DD operators and the polynomial duality model"};
  app.require_subcommand(1);
  Flags f;

  auto* num = app.add_subcommand("num", "deformed number (z)_kind");
  num->add_option("--kind", f.kind, "classical, q, eta or qeta")->required();
  num->add_option("--z", f.z, "integer argument")->required();
  add_deformation(num, f);

  auto* series = app.add_subcommand("series", "deformed exponential and hypergeometric series");
  series->require_subcommand(1);
  auto* exp = series->add_subcommand("exp", "coefficients 1/(n)_kind!");
  auto* hyp = series->add_subcommand("hyp", "hypergeometric coefficients");
  for (auto* s : {exp, hyp}) {
    s->add_option("--kind", f.kind, "classical, q, eta or qeta")->required();
    s->add_option("--order", f.order, "highest power of x");
    s->add_option("--specialize", f.specialize, "check the limit to q, eta or classical");
    add_deformation(s, f);
  }
  hyp->add_option("--a", f.a, "upper parameters, comma separated");
  hyp->add_option("--b", f.b, "lower parameters, comma separated");

  auto* diffop = app.add_subcommand("diffop", "difference derivative of a polynomial");
  diffop->add_option("--poly", f.poly, "coefficients c0,c1,... in ascending powers")->required();
  diffop->add_option("--scale", f.scale, "rational value or q");
  diffop->add_option("--shift", f.shift, "rational value or eta");

  auto* plane = app.add_subcommand("plane", "the (q, eta)-plane");
  plane->require_subcommand(1);
  auto* nord = plane->add_subcommand("normal-order", "normal form y^a x^b of a word");
  nord->add_option("--word", f.word, "word over x and y")->required();
  nord->add_option("--strategy", f.strategy, "leftmost or rightmost");
  add_deformation(nord, f);
  auto* funceq = plane->add_subcommand("funceq", "solve f1(x + y) = f2(y) f3(x)");
  funceq->add_option("--degree", f.degree, "truncation degree");
  add_deformation(funceq, f);

  auto* gl = app.add_subcommand("gl", "gl_M structure on a tensor product");
  gl->require_subcommand(1);
  auto* glcheck = gl->add_subcommand("check", "relations, Casimir, Omega and Cartan checks");
  glcheck->add_option("--M", f.M, "rank of gl_M");
  glcheck->add_option("--N", f.N, "number of tensor factors");
  glcheck->add_option("--module", f.module, "vector or sym:k");

  auto* kz = app.add_subcommand("kz", "KZ and DD operators");
  kz->require_subcommand(1);
  auto* build = kz->add_subcommand("build", "dump one operator");
  build->add_option("--kind", f.kind, "r, t or rt")->required();
  build->add_option("--site", f.site, "site i for kz, dynamical index a for dd (1-based)");
  build->add_option("--operator", f.family, "kz or dd");
  build->add_option("--construction", f.construction, "direct or substitution (rt only)");
  build->add_option("--eval", f.eval, "evaluate at z1=..,lambda1=..");
  add_context(build, f);
  auto* kzcheck = kz->add_subcommand("check", "operator identities");
  kzcheck->add_option("--which", f.which, "eq30, eq35, flatness or compat")->required();
  kzcheck->add_option("--kind", f.kind, "r, t or rt")->default_val("rt");
  add_context(kzcheck, f);
  add_sampling(kzcheck, f);

  auto* duality = app.add_subcommand("duality", "KZ/DD duality on the polynomial model");
  duality->add_option("--kind", f.kind, "r, t or rt")->required();
  duality->add_option("--M", f.M, "columns (gl_M)");
  duality->add_option("--N", f.N, "rows (gl_N)");
  duality->add_option("--degree", f.degree, "truncation degree")->default_val(3);
  duality->add_option("--kappa", f.kappa, "rational value or the symbol kappa");
  duality->add_option("--hbar", f.hbar, "rational value or the symbol hbar");
  duality->add_option("--eta", f.eta, "rational value or the symbol eta");
  add_sampling(duality, f);

  auto* suite = app.add_subcommand("suite", "run the identity suite");
  suite->add_flag("--all", f.all, "every check group");
  suite->add_option("--only", f.only, "comma separated groups");
  suite->add_option("--M", f.M, "rank for flatness checks");
  suite->add_option("--N", f.N, "sites for flatness checks");
  suite->add_option("--degree", f.degree, "duality model degree");
  suite->add_option("--order", f.order, "exponential series order");
  add_sampling(suite, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "defcalc: " << e.what() << '\n';
    std::cout << usage_error(e.what()).dump(2) << '\n';
    return kUsage;
  }

  try {
    if (num->parsed()) return run_num(f);
    if (exp->parsed()) return run_series(f, false);
    if (hyp->parsed()) return run_series(f, true);
    if (diffop->parsed()) return run_diffop(f);
    if (nord->parsed()) return run_normal_order(f);
    if (funceq->parsed()) return run_funceq(f);
    if (glcheck->parsed()) return run_gl(f);
    if (build->parsed()) return run_kz_build(f);
    if (kzcheck->parsed()) return run_kz_check(f);
    if (duality->parsed()) return run_duality(f);
    if (suite->parsed()) return run_suite_command(f, *suite);
  } catch (const InvalidArgument& e) {
    std::cerr << "defcalc: " << e.what() << '\n';
    std::cout << usage_error(e.what()).dump(2) << '\n';
    return kUsage;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "defcalc: " << e.what() << '\n';
    std::cout << usage_error(e.what()).dump(2) << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "defcalc: " << e.what() << '\n';
    Json out = envelope("error");
    out["status"] = "degenerate";
    out["reason"] = e.what();
    std::cout << out.dump(2) << '\n';
    return kFailed;
  }
  return kUsage;
}
