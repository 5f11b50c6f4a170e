#include "defcalc/deformed_functions.hpp"

#include <string>

#include "defcalc/errors.hpp"

namespace defcalc {

namespace {

enum class Reduction { q_to_one, eta_to_zero };

RatFunc reduce(const RatFunc& f, Reduction how) {
  return how == Reduction::q_to_one ? limit(f, "q", Rational(1)) : substitute(f, "eta", RatFunc(0));
}

}  // namespace

Json SeriesSpec::to_json() const {
  return {{"upper", upper}, {"lower", lower}, {"kind", std::string(to_string(kind))}, {"order", order}};
}

SeriesCoeffs exp_series(DeformedKind kind, const DeformationParams& params, int order) {
  return hypergeometric_series(SeriesSpec{{}, {}, kind, order}, params);
}

SeriesCoeffs hypergeometric_series(const SeriesSpec& spec, const DeformationParams& params) {
  if (spec.order < 0) throw InvalidArgument("series order must be nonnegative");
  SeriesCoeffs out;
  out.reserve(static_cast<std::size_t>(spec.order) + 1);
  out.emplace_back(1);
  for (long k = 1; k <= spec.order; ++k) {
    // ratio c_k / c_{k-1}
    RatFunc num(1), den = deformed_number(k, spec.kind, params);
    for (long a : spec.upper) num *= deformed_number(a + k - 1, spec.kind, params);
    for (long b : spec.lower) {
      const RatFunc factor = deformed_number(b + k - 1, spec.kind, params);
      if (factor.is_zero()) {
        throw ZeroLowerPochhammer("lower parameter " + std::to_string(b) + " gives a zero Pochhammer factor at k = " +
                                  std::to_string(k));
      }
      den *= factor;
    }
    if (den.is_zero()) throw DenominatorVanishes("(" + std::to_string(k) + ")! vanishes for these parameters");
    out.push_back(out.back() * num / den);
  }
  return out;
}

CheckReport specialize_series(const SeriesSpec& spec, DeformedKind target) {
  Reduction how;
  if (spec.kind == DeformedKind::q_eta && target == DeformedKind::eta) {
    how = Reduction::q_to_one;
  } else if (spec.kind == DeformedKind::q_eta && target == DeformedKind::q) {
    how = Reduction::eta_to_zero;
  } else if (spec.kind == DeformedKind::q && target == DeformedKind::classical) {
    how = Reduction::q_to_one;
  } else if (spec.kind == DeformedKind::eta && target == DeformedKind::classical) {
    how = Reduction::eta_to_zero;
  } else {
    throw InvalidArgument(std::string(to_string(target)) + " is not a specialization of " +
                          std::string(to_string(spec.kind)));
  }
  const SeriesCoeffs source = hypergeometric_series(spec);
  SeriesSpec other = spec;
  other.kind = target;
  const SeriesCoeffs expected = hypergeometric_series(other);

  Json mismatches = Json::array();
  for (std::size_t k = 0; k < source.size(); ++k) {
    const RatFunc reduced = reduce(source[k], how);
    if (!(reduced == expected[k])) {
      mismatches.push_back({{"k", k}, {"specialized", reduced.to_string()}, {"expected", expected[k].to_string()}});
    }
  }
  Json params = spec.to_json();
  params["target"] = std::string(to_string(target));
  const bool ok = mismatches.empty();
  return make_report("deformed_functions.specialize", std::move(params), ok,
                     ok ? Json{{"coefficients_checked", source.size()}} : Json{{"mismatches", mismatches}});
}

Json to_json(const SeriesCoeffs& coeffs) {
  Json out = Json::array();
  for (const auto& c : coeffs) out.push_back(c.to_string());
  return out;
}

}  // namespace defcalc
