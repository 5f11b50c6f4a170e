#include "defcalc/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "defcalc/errors.hpp"

namespace defcalc {

namespace {

std::pair<std::string_view, std::string_view> split_suffix(std::string_view s) {
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  return {s.substr(0, i), s.substr(i)};
}

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_compare(a, b) < 0; }
};

// Sorts by graded lex, merges duplicates and drops zero coefficients.
void canonicalize(std::vector<SparsePoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return grlex_compare(x.first, y.first) < 0; });
  std::vector<SparsePoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms = std::move(out);
}

}  // namespace

bool symbol_less(std::string_view a, std::string_view b) {
  auto [pa, na] = split_suffix(a);
  auto [pb, nb] = split_suffix(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

int grlex_compare(const Exponents& a, const Exponents& b) {
  const int da = total(a), db = total(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

SparsePoly::SparsePoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace_back(Exponents{}, constant);
}

SparsePoly SparsePoly::variable(const std::string& name) {
  return SparsePoly(std::make_shared<const VarList>(VarList{name}), {Term{Exponents{1}, Rational(1)}});
}

SparsePoly SparsePoly::from_terms(VarList vars, std::vector<Term> terms) {
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return symbol_less(vars[x], vars[y]); });
  VarList sorted;
  for (std::size_t k : order) sorted.push_back(vars[k]);
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] == sorted[k - 1]) throw InvalidArgument("duplicate variable " + sorted[k]);
  }
  for (auto& t : terms) {
    if (t.first.size() != vars.size()) throw InvalidArgument("exponent vector length mismatch");
    Exponents e(vars.size());
    for (std::size_t k = 0; k < order.size(); ++k) e[k] = t.first[order[k]];
    t.first = std::move(e);
  }
  canonicalize(terms);
  SparsePoly p(std::make_shared<const VarList>(std::move(sorted)), std::move(terms));
  p.trim_unused_vars();
  return p;
}

const VarList& SparsePoly::vars() const {
  static const VarList empty;
  return vars_ ? *vars_ : empty;
}

Rational SparsePoly::constant_term() const {
  if (terms_.empty() || total(terms_.front().first) != 0) return Rational(0);
  return terms_.front().second;
}

int SparsePoly::total_degree() const { return terms_.empty() ? -1 : total(terms_.back().first); }

int SparsePoly::degree_in(std::string_view var) const {
  const auto& vs = vars();
  auto it = std::find(vs.begin(), vs.end(), var);
  if (it == vs.end()) return terms_.empty() ? -1 : 0;
  const auto k = static_cast<std::size_t>(it - vs.begin());
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[k]);
  return d;
}

bool SparsePoly::depends_on(std::string_view var) const {
  const auto& vs = vars();
  return std::find(vs.begin(), vs.end(), var) != vs.end();
}

void SparsePoly::trim_unused_vars() {
  const std::size_t n = vars().size();
  if (n == 0) return;
  std::vector<bool> used(n, false);
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < n; ++k) used[k] = used[k] || t.first[k] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  VarList kept;
  for (std::size_t k = 0; k < n; ++k) {
    if (used[k]) kept.push_back((*vars_)[k]);
  }
  for (auto& t : terms_) {
    Exponents e;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k]) e.push_back(t.first[k]);
    }
    t.first = std::move(e);
  }
  vars_ = kept.empty() ? nullptr : std::make_shared<const VarList>(std::move(kept));
}

SparsePoly SparsePoly::embedded(const std::shared_ptr<const VarList>& target) const {
  if (vars_ == target) return *this;
  const auto& own = vars();
  std::vector<std::size_t> pos(own.size());
  for (std::size_t k = 0; k < own.size(); ++k) {
    pos[k] = static_cast<std::size_t>(std::find(target->begin(), target->end(), own[k]) - target->begin());
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->size(), 0);
    for (std::size_t k = 0; k < own.size(); ++k) e[pos[k]] = t.first[k];
    terms.emplace_back(std::move(e), t.second);
  }
  return SparsePoly(target, std::move(terms));
}

std::pair<SparsePoly, SparsePoly> unify(const SparsePoly& a, const SparsePoly& b) {
  if (a.vars_ == b.vars_ || a.vars() == b.vars()) {
    SparsePoly bb = b;
    bb.vars_ = a.vars_;
    return {a, std::move(bb)};
  }
  VarList merged;
  std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                 std::back_inserter(merged),
                 [](const std::string& x, const std::string& y) { return symbol_less(x, y); });
  auto shared = std::make_shared<const VarList>(std::move(merged));
  return {a.embedded(shared), b.embedded(shared)};
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.second *= factor;
  return r;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto [x, y] = unify(a, b);
  std::vector<SparsePoly::Term> out;
  out.reserve(x.terms_.size() + y.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < x.terms_.size() || j < y.terms_.size()) {
    int c;
    if (i == x.terms_.size()) {
      c = 1;
    } else if (j == y.terms_.size()) {
      c = -1;
    } else {
      c = grlex_compare(x.terms_[i].first, y.terms_[j].first);
    }
    if (c < 0) {
      out.push_back(std::move(x.terms_[i++]));
    } else if (c > 0) {
      out.push_back(std::move(y.terms_[j++]));
    } else {
      Rational s = x.terms_[i].second + y.terms_[j].second;
      if (!s.is_zero()) out.emplace_back(std::move(x.terms_[i].first), std::move(s));
      ++i;
      ++j;
    }
  }
  SparsePoly r(x.vars_, std::move(out));
  r.trim_unused_vars();
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.constant_term());
  if (b.is_constant()) return a.scaled(b.constant_term());
  auto [x, y] = unify(a, b);
  std::vector<SparsePoly::Term> out;
  out.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) {
      Exponents e(s.first.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = s.first[k] + t.first[k];
      out.emplace_back(std::move(e), s.second * t.second);
    }
  }
  canonicalize(out);
  SparsePoly r(x.vars_, std::move(out));
  r.trim_unused_vars();
  return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.vars() == b.vars() && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly result(Rational(1));
  SparsePoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<SparsePoly> SparsePoly::divide_exact(const SparsePoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return SparsePoly{};
  if (divisor.is_constant()) return scaled(Rational(1) / divisor.constant_term());
  for (const auto& v : divisor.vars()) {
    if (degree_in(v) < divisor.degree_in(v)) return std::nullopt;
  }
  if (total_degree() < divisor.total_degree()) return std::nullopt;

  auto [num, den] = unify(*this, divisor);
  const auto& lead = den.leading_term();
  std::map<Exponents, Rational, GrlexLess> rem;
  for (const auto& t : num.terms_) rem.emplace(t.first, t.second);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Exponents e(top->first.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = top->first[k] - lead.first[k];
      if (e[k] < 0) return std::nullopt;
    }
    const Rational c = top->second / lead.second;
    for (const auto& t : den.terms_) {
      Exponents m(e.size());
      for (std::size_t k = 0; k < e.size(); ++k) m[k] = e[k] + t.first[k];
      auto [it, inserted] = rem.try_emplace(std::move(m), Rational(0));
      it->second -= c * t.second;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.emplace_back(std::move(e), c);
  }
  std::reverse(quotient.begin(), quotient.end());
  SparsePoly q(num.vars_, std::move(quotient));
  q.trim_unused_vars();
  return q;
}

std::vector<SparsePoly> SparsePoly::coefficients_in(std::string_view var) const {
  const auto& vs = vars();
  auto it = std::find(vs.begin(), vs.end(), var);
  if (it == vs.end()) return {*this};
  const auto k = static_cast<std::size_t>(it - vs.begin());
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const auto& t : terms_) {
    Exponents e = t.first;
    const int d = e[k];
    e[k] = 0;
    buckets[static_cast<std::size_t>(d)].emplace_back(std::move(e), t.second);
  }
  std::vector<SparsePoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    canonicalize(b);
    SparsePoly c(vars_, std::move(b));
    c.trim_unused_vars();
    out.push_back(std::move(c));
  }
  return out;
}

SparsePoly SparsePoly::substitute(std::string_view var, const Rational& value) const {
  auto coeffs = coefficients_in(var);
  SparsePoly r;
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r.scaled(value) + coeffs[k];
  return r;
}

Rational SparsePoly::evaluate(const Assignment& point) const {
  const auto& vs = vars();
  std::vector<std::vector<Rational>> powers(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    auto it = point.find(vs[k]);
    if (it == point.end()) throw InvalidArgument("no value assigned to variable " + vs[k]);
    powers[k].push_back(Rational(1));
    const int d = degree_in(vs[k]);
    for (int j = 1; j <= d; ++j) powers[k].push_back(powers[k].back() * it->second);
  }
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.second;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (t.first[k] != 0) v *= powers[k][static_cast<std::size_t>(t.first[k])];
    }
    sum += v;
  }
  return sum;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& vs = vars();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vs[k];
      if (e[k] > 1) mono += '^' + std::to_string(e[k]);
    }
    std::string term;
    if (mono.empty()) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == Rational(-1)) {
      term = "-" + mono;
    } else {
      term = c.to_string() + "*" + mono;
    }
    if (!first && term.front() != '-') os << '+';
    os << term;
    first = false;
  }
  return os.str();
}

nlohmann::ordered_json SparsePoly::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& [e, c] : terms_) {
    std::string key;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k > 0) key += ',';
      key += std::to_string(e[k]);
    }
    terms[key] = c.to_string();
  }
  return {{"vars", vars()}, {"terms", std::move(terms)}};
}

SparsePoly derivative(const SparsePoly& p, std::string_view var) {
  const auto& vs = p.vars();
  auto it = std::find(vs.begin(), vs.end(), var);
  if (it == vs.end()) return {};
  const auto k = static_cast<std::size_t>(it - vs.begin());
  std::vector<SparsePoly::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponents f = e;
    f[k] -= 1;
    terms.emplace_back(std::move(f), c * Rational(e[k]));
  }
  return SparsePoly::from_terms(vs, std::move(terms));
}

int compare(const SparsePoly& a, const SparsePoly& b) {
  const auto& va = a.vars();
  const auto& vb = b.vars();
  if (va != vb) {
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end(),
                                        [](const auto& x, const auto& y) { return symbol_less(x, y); })
               ? -1
               : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    const auto& [ea, ca] = a.terms()[i];
    const auto& [eb, cb] = b.terms()[i];
    if (int c = grlex_compare(ea, eb); c != 0) return c;
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

}  // namespace defcalc
