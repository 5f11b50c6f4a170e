#ifndef DEFCALC_DEFORMED_FUNCTIONS_HPP
#define DEFCALC_DEFORMED_FUNCTIONS_HPP

#include <vector>

#include "defcalc/deformed_numbers.hpp"

namespace defcalc {

/// Truncated hypergeometric series F_{n,m} with integer parameters. Empty
/// parameter lists give the deformed exponential.
struct SeriesSpec {
  std::vector<long> upper;
  std::vector<long> lower;
  DeformedKind kind = DeformedKind::classical;
  int order = 0;

  Json to_json() const;
};

/// Coefficient k is the coefficient of x^k; size is order + 1.
using SeriesCoeffs = std::vector<RatFunc>;

/// Coefficients 1/(n)_kind! for n = 0..order.
SeriesCoeffs exp_series(DeformedKind kind, const DeformationParams& params, int order);

/// Coefficient of x^k: prod_i ((a_i)_kind)_(k) / ((k)_kind! prod_j ((b_j)_kind)_(k)).
/// Throws ZeroLowerPochhammer when a lower Pochhammer product vanishes within the order.
SeriesCoeffs hypergeometric_series(const SeriesSpec& spec, const DeformationParams& params = {});

/// Verifies coefficient-wise that the series of spec.kind specializes to the
/// series of `target`: qeta -> eta (q -> 1), qeta -> q (eta = 0),
/// q -> classical (q -> 1), eta -> classical (eta = 0).
CheckReport specialize_series(const SeriesSpec& spec, DeformedKind target);

Json to_json(const SeriesCoeffs& coeffs);

}  // namespace defcalc

#endif  // DEFCALC_DEFORMED_FUNCTIONS_HPP
