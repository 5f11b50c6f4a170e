#include "defcalc/diff_op.hpp"

#include "defcalc/errors.hpp"

namespace defcalc {

namespace {

RatFuncMatrix partial_of(const RatFuncMatrix& m, const std::string& var) {
  return m.unaryExpr([&](const RatFunc& x) { return x.is_zero() ? x : derivative(x, var); });
}

RatFuncMatrix derivative_of(RatFuncMatrix m, const DerivMonomial& gamma) {
  for (const auto& [v, k] : gamma) {
    for (int s = 0; s < k; ++s) m = partial_of(m, v);
  }
  return m;
}

long binomial(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Every gamma <= alpha with its multinomial weight prod C(alpha_v, gamma_v).
std::vector<std::pair<DerivMonomial, long>> sub_monomials(const DerivMonomial& alpha) {
  std::vector<std::pair<DerivMonomial, long>> out{{DerivMonomial{}, 1}};
  for (const auto& [v, k] : alpha) {
    std::vector<std::pair<DerivMonomial, long>> next;
    for (const auto& [g, w] : out) {
      for (int j = 0; j <= k; ++j) {
        DerivMonomial h = g;
        if (j > 0) h[v] = j;
        next.emplace_back(std::move(h), w * binomial(k, j));
      }
    }
    out = std::move(next);
  }
  return out;
}

DerivMonomial combine(const DerivMonomial& alpha, const DerivMonomial& gamma, const DerivMonomial& beta) {
  DerivMonomial out = beta;
  for (const auto& [v, k] : alpha) {
    auto it = gamma.find(v);
    const int rest = k - (it == gamma.end() ? 0 : it->second);
    if (rest > 0) out[v] += rest;
  }
  return out;
}

void accumulate_evaluated(EvaluatedOp& out, const DerivMonomial& d, const RationalMatrix& m) {
  auto [it, inserted] = out.try_emplace(d, m);
  if (!inserted) it->second += m;
}

}  // namespace

std::string to_string(const DerivMonomial& d) {
  if (d.empty()) return "1";
  std::string out;
  for (const auto& [v, k] : d) {
    if (!out.empty()) out += " ";
    out += "d[" + v + "]";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

DiffOp DiffOp::matrix(RatFuncMatrix m) {
  DiffOp op(m.rows());
  op.add({}, m);
  return op;
}

DiffOp DiffOp::partial(const std::string& var, const RatFunc& coefficient, Eigen::Index dim) {
  DiffOp op(dim);
  op.add({{var, 1}}, coefficient, RationalMatrix::Identity(dim, dim));
  return op;
}

RatFuncMatrix DiffOp::coefficient(const DerivMonomial& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RatFuncMatrix::Zero(dim_, dim_) : it->second;
}

void DiffOp::add(const DerivMonomial& alpha, const RatFuncMatrix& m) {
  if (m.rows() != dim_ || m.cols() != dim_) throw InvalidArgument("operator coefficient has the wrong size");
  auto [it, inserted] = terms_.try_emplace(alpha, m);
  if (!inserted) it->second += m;
  if (defcalc::is_zero<RatFunc>(it->second)) terms_.erase(it);
}

void DiffOp::add(const DerivMonomial& alpha, const RatFunc& f, const RationalMatrix& m) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, RatFuncMatrix::Zero(dim_, dim_));
  accumulate(it->second, f, m);
  if (defcalc::is_zero<RatFunc>(it->second)) terms_.erase(it);
}

DiffOp operator+(DiffOp a, const DiffOp& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("operators act on spaces of different dimension");
  for (const auto& [d, m] : b.terms_) a.add(d, m);
  return a;
}

DiffOp operator-(DiffOp a, const DiffOp& b) { return a + RatFunc(-1) * b; }

DiffOp operator*(const RatFunc& f, const DiffOp& a) {
  DiffOp out(a.dim_);
  if (f.is_zero()) return out;
  for (const auto& [d, m] : a.terms_) out.terms_.emplace(d, scaled(f, m));
  return out;
}

DiffOp DiffOp::substitute(const std::string& var, const RatFunc& value) const {
  DiffOp out(dim_);
  for (const auto& [d, m] : terms_) {
    out.add(d, m.unaryExpr([&](const RatFunc& x) { return x.is_zero() ? x : defcalc::substitute(x, var, value); }));
  }
  return out;
}

DiffOp DiffOp::block(Eigen::Index start, Eigen::Index size) const {
  DiffOp out(size);
  for (const auto& [d, m] : terms_) out.add(d, RatFuncMatrix(m.block(start, start, size, size)));
  return out;
}

std::set<std::string, SymbolLess> DiffOp::variables() const {
  std::set<std::string, SymbolLess> out;
  for (const auto& [d, m] : terms_) {
    for (const auto& [v, k] : d) out.insert(v);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (m(r, c).is_zero() || m(r, c).is_constant()) continue;
        auto vs = m(r, c).variables();
        out.insert(vs.begin(), vs.end());
      }
    }
  }
  return out;
}

Json DiffOp::to_json() const {
  Json terms = Json::array();
  for (const auto& [d, m] : terms_) terms.push_back({{"derivative", to_string(d)}, {"matrix", defcalc::to_json(m)}});
  return {{"dim", dim_}, {"terms", terms}};
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("operators act on spaces of different dimension");
  DiffOp out(a.dim());
  for (const auto& [alpha, am] : a.terms()) {
    const auto subs = sub_monomials(alpha);
    for (const auto& [beta, bm] : b.terms()) {
      for (const auto& [gamma, weight] : subs) {
        const RatFuncMatrix db = derivative_of(bm, gamma);
        if (is_zero<RatFunc>(db)) continue;
        out.add(combine(alpha, gamma, beta), scaled(RatFunc(weight), product(am, db)));
      }
    }
  }
  return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

EvaluatedOp evaluate(const DiffOp& a, const Assignment& point) {
  EvaluatedOp out;
  for (const auto& [d, m] : a.terms()) {
    RationalMatrix v = evaluate(m, point);
    if (!is_zero<Rational>(v)) out.emplace(d, std::move(v));
  }
  return out;
}

EvaluatedOp commutator_at(const DiffOp& a, const DiffOp& b, const Assignment& point) {
  EvaluatedOp out;
  auto half = [&](const DiffOp& x, const DiffOp& y, const Rational& sign) {
    for (const auto& [alpha, xm] : x.terms()) {
      const RationalMatrix xv = evaluate(xm, point) * sign;
      const auto subs = sub_monomials(alpha);
      for (const auto& [beta, ym] : y.terms()) {
        for (const auto& [gamma, weight] : subs) {
          const RationalMatrix dy = evaluate(derivative_of(ym, gamma), point);
          if (is_zero<Rational>(dy)) continue;
          accumulate_evaluated(out, combine(alpha, gamma, beta), product(xv, dy) * Rational(weight));
        }
      }
    }
  };
  half(a, b, Rational(1));
  half(b, a, Rational(-1));
  std::erase_if(out, [](const auto& kv) { return is_zero<Rational>(kv.second); });
  return out;
}

bool is_zero(const EvaluatedOp& op) {
  for (const auto& [d, m] : op) {
    if (!is_zero<Rational>(m)) return false;
  }
  return true;
}

Json to_json(const EvaluatedOp& op) {
  Json terms = Json::array();
  for (const auto& [d, m] : op) terms.push_back({{"derivative", to_string(d)}, {"matrix", to_json(m)}});
  return terms;
}

}  // namespace defcalc
