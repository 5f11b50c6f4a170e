#include "defcalc/quantum_plane.hpp"

#include <algorithm>
#include <random>

#include "defcalc/deformed_functions.hpp"
#include "defcalc/errors.hpp"
#include "defcalc/linear_solve.hpp"

namespace defcalc {

namespace {

bool is_normal(const PlaneWord& w) { return w.find("xy") == std::string::npos; }

PlanePolynomial::Monomial degrees(const PlaneWord& w) {
  const auto a = static_cast<int>(std::count(w.begin(), w.end(), 'y'));
  return {a, static_cast<int>(w.size()) - a};
}

std::string coefficient_text(const RatFunc& c) {
  std::string s = c.to_string();
  if (s.find_first_of("+-/", 1) != std::string::npos) s = "(" + s + ")";
  return s;
}

std::string power_text(char letter, int n) {
  if (n == 0) return "";
  std::string s(1, letter);
  return n == 1 ? s : s + "^" + std::to_string(n);
}

// Normal forms of x^b y^c, memoized per parameter set.
class Multiplier {
 public:
  explicit Multiplier(const DeformationParams& params) : params_(params) {}

  const PlanePolynomial& swap(int b, int c) {
    auto it = cache_.find({b, c});
    if (it != cache_.end()) return it->second;
    PlanePolynomial p = normal_order(std::string(static_cast<std::size_t>(b), 'x') + std::string(static_cast<std::size_t>(c), 'y'), params_);
    return cache_.emplace(std::make_pair(b, c), std::move(p)).first->second;
  }

  PlanePolynomial multiply(const PlanePolynomial& l, const PlanePolynomial& r) {
    PlanePolynomial out;
    for (const auto& [m1, c1] : l.terms()) {
      for (const auto& [m2, c2] : r.terms()) {
        const RatFunc c = c1 * c2;
        for (const auto& [m, cm] : swap(m1.second, m2.first).terms()) {
          out.add({m1.first + m.first, m.second + m2.second}, c * cm);
        }
      }
    }
    return out;
  }

 private:
  DeformationParams params_;
  std::map<std::pair<int, int>, PlanePolynomial> cache_;
};

void continue_with_particular(std::array<SeriesCoeffs, 3>& f, const LinearSolution<RatFunc>& sol, int n) {
  const auto un = static_cast<std::size_t>(n);
  f[0][un] = sol.particular[0];
  if (n > 1) {
    f[1][un] = sol.particular[1];
    f[2][un] = sol.particular[2];
  }
}

}  // namespace

PlanePolynomial PlanePolynomial::monomial(int a, int b, RatFunc coefficient) {
  PlanePolynomial p;
  p.add({a, b}, coefficient);
  return p;
}

RatFunc PlanePolynomial::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? RatFunc() : it->second;
}

void PlanePolynomial::add(Monomial m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PlanePolynomial operator+(PlanePolynomial a, const PlanePolynomial& b) {
  for (const auto& [m, c] : b.terms_) a.add(m, c);
  return a;
}

PlanePolynomial operator*(const RatFunc& c, const PlanePolynomial& p) {
  PlanePolynomial out;
  for (const auto& [m, x] : p.terms_) out.add(m, c * x);
  return out;
}

std::string PlanePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, RatFunc>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& l, const auto& r) { return l.first.second > r.first.second; });
  std::string out;
  for (const auto& [m, c] : sorted) {
    if (!out.empty()) out += " + ";
    std::string mono = power_text('y', m.first);
    const std::string xs = power_text('x', m.second);
    if (!mono.empty() && !xs.empty()) mono += "*";
    mono += xs;
    if (mono.empty()) {
      out += c.to_string();
    } else {
      out += c == RatFunc(1) ? mono : coefficient_text(c) + "*" + mono;
    }
  }
  return out;
}

Json PlanePolynomial::to_json() const {
  Json terms = Json::array();
  for (const auto& [m, c] : terms_) terms.push_back({{"y", m.first}, {"x", m.second}, {"coefficient", c.to_string()}});
  return {{"text", to_string()}, {"terms", terms}};
}

PlanePolynomial normal_order(const PlaneWord& w, const DeformationParams& params, RewriteStrategy strategy) {
  if (w.find_first_not_of("xy") != std::string::npos) {
    throw InvalidArgument("plane word '" + w + "' has letters other than x and y");
  }
  std::map<PlaneWord, RatFunc> current{{w, RatFunc(1)}};
  PlanePolynomial out;
  while (!current.empty()) {
    std::map<PlaneWord, RatFunc> next;
    auto push = [&next](PlaneWord word, const RatFunc& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = next.try_emplace(std::move(word), c);
      if (!inserted) it->second += c;
    };
    for (const auto& [word, c] : current) {
      if (c.is_zero()) continue;
      if (is_normal(word)) {
        out.add(degrees(word), c);
        continue;
      }
      const auto at = strategy == RewriteStrategy::leftmost ? word.find("xy") : word.rfind("xy");
      PlaneWord swapped = word, doubled = word;
      swapped[at] = 'y';
      swapped[at + 1] = 'x';
      doubled[at] = 'y';
      push(std::move(swapped), c * params.q);
      push(std::move(doubled), c * params.eta);
    }
    current = std::move(next);
  }
  return out;
}

PlanePolynomial multiply(const PlanePolynomial& a, const PlanePolynomial& b, const DeformationParams& params) {
  return Multiplier(params).multiply(a, b);
}

PlanePolynomial power_of_sum(int n, const DeformationParams& params) {
  if (n < 0) throw InvalidArgument("power must be nonnegative");
  Multiplier m(params);
  const PlanePolynomial sum = PlanePolynomial::monomial(0, 1) + PlanePolynomial::monomial(1, 0);
  PlanePolynomial p = PlanePolynomial::monomial(0, 0);
  for (int k = 0; k < n; ++k) p = m.multiply(p, sum);
  return p;
}

FunctionalEquationSolution solve_functional_table(const DeformationParams& params, int degree) {
  if (degree < 1) throw InvalidArgument("functional equation degree must be at least 1");
  const auto size = static_cast<std::size_t>(degree) + 1;
  FunctionalEquationSolution out;
  auto& f = out.f;
  for (auto& fi : f) {
    fi.assign(size, RatFunc());
    fi[0] = RatFunc(1);
  }
  f[1][1] = f[2][1] = RatFunc(1);

  Multiplier mult(params);
  const PlanePolynomial sum = PlanePolynomial::monomial(0, 1) + PlanePolynomial::monomial(1, 0);
  PlanePolynomial power = PlanePolynomial::monomial(0, 0);
  out.solved_degree = degree;

  for (int n = 1; n <= degree; ++n) {
    power = mult.multiply(power, sum);
    const auto un = static_cast<std::size_t>(n);
    // Unknowns: f1_n, and f2_n, f3_n from degree 2 on; row a is the y^a x^(n-a) coefficient.
    const Eigen::Index unknowns = n == 1 ? 1 : 3;
    RatFuncMatrix a = RatFuncMatrix::Zero(n + 1, unknowns);
    std::vector<RatFunc> b(un + 1);
    for (int ya = 0; ya <= n; ++ya) {
      const int xb = n - ya;
      a(ya, 0) = power.coefficient(ya, xb);
      if (n > 1 && ya == n) {
        a(ya, 1) = RatFunc(-1);
      } else if (n > 1 && xb == n) {
        a(ya, 2) = RatFunc(-1);
      } else {
        b[static_cast<std::size_t>(ya)] = f[1][static_cast<std::size_t>(ya)] * f[2][static_cast<std::size_t>(xb)];
      }
    }
    LinearSolution<RatFunc> sol = solve_linear(a, b);
    if (sol.outcome == SolveOutcome::no_solution) {
      out.outcome = SolveOutcome::no_solution;
      out.solved_degree = n - 1;
      break;
    }
    if (sol.outcome == SolveOutcome::underdetermined) {
      out.outcome = SolveOutcome::underdetermined;
      Json family{{"degree", n}};
      Json particular = Json::array(), null = Json::array();
      for (const auto& v : sol.particular) particular.push_back(v.to_string());
      for (const auto& vec : sol.nullspace) {
        Json row = Json::array();
        for (const auto& v : vec) row.push_back(v.to_string());
        null.push_back(row);
      }
      family["particular"] = particular;
      family["nullspace"] = null;
      // Pick a family member that agrees with exp_qeta if one exists.
      RatFunc target;
      try {
        target = exp_series(DeformedKind::q_eta, params, n)[un];
      } catch (const DenominatorVanishes&) {
        out.families.push_back(family);
        continue_with_particular(f, sol, n);
        continue;
      }
      for (Eigen::Index pick : {1, 0, 2}) {
        if (pick >= unknowns) continue;
        RatFuncMatrix a2(a.rows() + 1, a.cols());
        a2.topRows(a.rows()) = a;
        a2.row(a.rows()).setZero();
        a2(a.rows(), pick) = RatFunc(1);
        std::vector<RatFunc> b2 = b;
        b2.push_back(target);
        auto constrained = solve_linear(a2, b2);
        if (constrained.outcome != SolveOutcome::no_solution) {
          family["chosen_member_matches"] = "f" + std::to_string(pick + 1);
          sol.particular = constrained.particular;
          break;
        }
      }
      out.families.push_back(family);
    }
    continue_with_particular(f, sol, n);
  }
  for (auto& fi : f) fi.resize(static_cast<std::size_t>(out.solved_degree) + 1);
  return out;
}

CheckReport solve_functional_equation(const DeformationParams& params, int degree) {
  Json parameters = params.to_json();
  parameters["degree"] = degree;
  FunctionalEquationSolution sol;
  SeriesCoeffs target;
  try {
    target = exp_series(DeformedKind::q_eta, params, degree);
    sol = solve_functional_table(params, degree);
  } catch (const DenominatorVanishes& e) {
    return CheckReport{"quantum_plane.funceq", parameters, Status::degenerate, Json{{"reason", e.what()}}};
  }

  Json table = Json::object(), matches = Json::object();
  bool any = false;
  for (std::size_t i = 0; i < 3; ++i) {
    bool match = sol.outcome != SolveOutcome::no_solution;
    for (std::size_t n = 0; n < sol.f[i].size(); ++n) match = match && sol.f[i][n] == target[n];
    const std::string name = "f" + std::to_string(i + 1);
    table[name] = to_json(sol.f[i]);
    matches[name] = match;
    any = any || match;
  }
  Json witness{{"outcome", std::string(to_string(sol.outcome))}, {"gauge", "f2'(0) = f3'(0) = 1"}};
  if (sol.outcome == SolveOutcome::no_solution) witness["failed_degree"] = sol.solved_degree + 1;
  witness["coefficients"] = table;
  witness["exp_qeta"] = to_json(target);
  witness["matches_exp_qeta"] = matches;
  if (!sol.families.empty()) witness["families"] = sol.families;
  return make_report("quantum_plane.funceq", std::move(parameters), any, std::move(witness));
}

namespace {

// x^b y^c in the Jordan plane, by x y^c = y^c x + c eta y^(c+1).
PlanePolynomial jordan_move(int b, int c, const RatFunc& eta) {
  if (b == 0) return PlanePolynomial::monomial(c, 0);
  const PlanePolynomial head = jordan_move(b - 1, c, eta);
  PlanePolynomial out;
  for (const auto& [m, k] : head.terms()) out.add({m.first, m.second + 1}, k);
  return out + (RatFunc(c) * eta) * jordan_move(b - 1, c + 1, eta);
}

PlanePolynomial jordan_order(const PlaneWord& w, const RatFunc& eta) {
  PlanePolynomial acc = PlanePolynomial::monomial(0, 0);
  for (char letter : w) {
    PlanePolynomial next;
    for (const auto& [m, c] : acc.terms()) {
      if (letter == 'x') {
        next.add({m.first, m.second + 1}, c);
        continue;
      }
      const PlanePolynomial moved = jordan_move(m.second, 1, eta);
      for (const auto& [m2, c2] : moved.terms()) next.add({m.first + m2.first, m2.second}, c * c2);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<PlaneWord> random_words(std::uint64_t seed, int count, int max_length) {
  std::mt19937_64 rng(seed);
  std::vector<PlaneWord> out;
  for (int i = 0; i < count; ++i) {
    const auto len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_length + 1));
    PlaneWord w;
    for (int k = 0; k < len; ++k) w += (rng() & 1U) != 0 ? 'y' : 'x';
    out.push_back(std::move(w));
  }
  return out;
}

CheckReport confluence_check(const std::vector<PlaneWord>& words, const DeformationParams& params) {
  Json params_json = params.to_json();
  params_json["words"] = words.size();
  for (const auto& w : words) {
    const PlanePolynomial left = normal_order(w, params, RewriteStrategy::leftmost);
    const PlanePolynomial right = normal_order(w, params, RewriteStrategy::rightmost);
    if (!(left == right)) {
      return make_report("quantum_plane.confluence", std::move(params_json), false,
                         {{"word", w}, {"leftmost", left.to_json()}, {"rightmost", right.to_json()}});
    }
  }
  return make_report("quantum_plane.confluence", std::move(params_json), true, {{"words_checked", words.size()}});
}

CheckReport specialization_check(const std::vector<PlaneWord>& words) {
  const RatFunc q = RatFunc::symbol("q"), eta = RatFunc::symbol("eta");
  const DeformationParams manin{q, RatFunc(0)}, jordan{RatFunc(1), eta}, commuting{RatFunc(1), RatFunc(0)};
  for (const auto& w : words) {
    const auto [a, b] = degrees(w);
    int inversions = 0, xs = 0;
    for (char c : w) {
      if (c == 'x') {
        ++xs;
      } else {
        inversions += xs;
      }
    }
    struct Case {
      const char* plane;
      PlanePolynomial got, expected;
    };
    const Case cases[] = {
        {"manin", normal_order(w, manin), PlanePolynomial::monomial(a, b, q.pow(inversions))},
        {"jordan", normal_order(w, jordan), jordan_order(w, eta)},
        {"commuting", normal_order(w, commuting), PlanePolynomial::monomial(a, b)},
    };
    for (const auto& c : cases) {
      if (!(c.got == c.expected)) {
        return make_report("quantum_plane.specializations", {{"words", words.size()}}, false,
                           {{"word", w}, {"plane", c.plane}, {"normal_order", c.got.to_json()},
                            {"expected", c.expected.to_json()}});
      }
    }
  }
  return make_report("quantum_plane.specializations", {{"words", words.size()}}, true,
                     {{"words_checked", words.size()}, {"planes", Json::array({"manin", "jordan", "commuting"})}});
}

}  // namespace defcalc
