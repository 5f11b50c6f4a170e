#include "defcalc/deformed_numbers.hpp"

#include <string>

#include "defcalc/errors.hpp"

namespace defcalc {

namespace {

// 1 + x + ... + x^(n-1)
RatFunc geometric_sum(const RatFunc& x, long n) {
  RatFunc sum;
  for (long k = 0; k < n; ++k) sum = sum * x + RatFunc(1);
  return sum;
}

RatFunc q_number(long z, const RatFunc& q) {
  if (z >= 0) return geometric_sum(q, z);
  if (q.is_zero()) throw DenominatorVanishes("(z)_q with z = " + std::to_string(z) + " needs q invertible");
  // (-m)_q = -(q^-1 + ... + q^-m)
  return -geometric_sum(q, -z) / q.pow(static_cast<int>(-z));
}

RatFunc divide_checked(const RatFunc& num, const RatFunc& den, const std::string& what) {
  if (den.is_zero()) throw DenominatorVanishes(what + " vanishes");
  return num / den;
}

}  // namespace

std::string_view to_string(DeformedKind kind) {
  switch (kind) {
    case DeformedKind::classical:
      return "classical";
    case DeformedKind::q:
      return "q";
    case DeformedKind::eta:
      return "eta";
    case DeformedKind::q_eta:
      return "qeta";
  }
  return "classical";
}

DeformedKind parse_kind(std::string_view name) {
  if (name == "classical") return DeformedKind::classical;
  if (name == "q") return DeformedKind::q;
  if (name == "eta") return DeformedKind::eta;
  if (name == "qeta" || name == "q_eta") return DeformedKind::q_eta;
  throw InvalidArgument("unknown deformation kind '" + std::string(name) + "'");
}

Json DeformationParams::to_json() const { return {{"q", q.to_string()}, {"eta", eta.to_string()}}; }

RatFunc deformed_number(long z, DeformedKind kind, const DeformationParams& params) {
  switch (kind) {
    case DeformedKind::classical:
      return RatFunc(z);
    case DeformedKind::q:
      return q_number(z, params.q);
    case DeformedKind::eta:
      return divide_checked(RatFunc(z), RatFunc(1) + params.eta * RatFunc(z - 1),
                            "1 + eta(z-1) at z = " + std::to_string(z));
    case DeformedKind::q_eta:
      return divide_checked(q_number(z, params.q), RatFunc(1) + params.eta * q_number(z - 1, params.q),
                            "1 + eta(z-1)_q at z = " + std::to_string(z));
  }
  return RatFunc(z);
}

RatFunc deformed_factorial(long n, DeformedKind kind, const DeformationParams& params) {
  if (n < 0) throw InvalidArgument("factorial of a negative integer");
  RatFunc f(1);
  for (long k = 1; k <= n; ++k) f *= deformed_number(k, kind, params);
  return f;
}

RatFunc pochhammer(long a, long k, DeformedKind kind, const DeformationParams& params) {
  if (k < 0) throw InvalidArgument("Pochhammer symbol with negative length");
  RatFunc p(1);
  for (long j = 0; j < k; ++j) p *= deformed_number(a + j, kind, params);
  return p;
}

CheckReport specialize_number(long z, const DeformationParams& params) {
  Json parameters{{"z", z}, {"q", params.q.to_string()}, {"eta", params.eta.to_string()}};
  try {
    // q -> 1 is taken as an exact limit with q symbolic.
    const DeformationParams symbolic_q{RatFunc::symbol("q"), params.eta};
    const RatFunc at_q1 = limit(deformed_number(z, DeformedKind::q_eta, symbolic_q), "q", Rational(1));
    const RatFunc eta_number = deformed_number(z, DeformedKind::eta, params);
    const RatFunc at_eta0 = deformed_number(z, DeformedKind::q_eta, {params.q, RatFunc(0)});
    const RatFunc q_number = deformed_number(z, DeformedKind::q, params);
    const bool ok = at_q1 == eta_number && at_eta0 == q_number;
    Json witness{{"qeta_at_q1", at_q1.to_string()},
                 {"eta_number", eta_number.to_string()},
                 {"qeta_at_eta0", at_eta0.to_string()},
                 {"q_number", q_number.to_string()}};
    return make_report("deformed_numbers.specialize", std::move(parameters), ok, std::move(witness));
  } catch (const Error& e) {
    CheckReport r;
    r.check_name = "deformed_numbers.specialize";
    r.parameters = std::move(parameters);
    r.status = Status::degenerate;
    r.witness = Json{{"error", e.what()}};
    return r;
  }
}

}  // namespace defcalc
