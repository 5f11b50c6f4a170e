#ifndef DEFCALC_DEFORMED_NUMBERS_HPP
#define DEFCALC_DEFORMED_NUMBERS_HPP

#include <string_view>

#include "defcalc/rat_func.hpp"
#include "defcalc/report.hpp"

namespace defcalc {

enum class DeformedKind { classical, q, eta, q_eta };

/// "classical", "q", "eta", "qeta".
std::string_view to_string(DeformedKind kind);
/// Accepts the names above plus "q_eta".
DeformedKind parse_kind(std::string_view name);

/// Deformation parameters; each is a symbol or a concrete rational.
struct DeformationParams {
  RatFunc q = RatFunc::symbol("q");
  RatFunc eta = RatFunc::symbol("eta");

  Json to_json() const;
};

/// (z)_kind for integer z:
///   (z)_q  = (1 - q^z) / (1 - q), stored as the cancelled geometric sum,
///   (z)_eta = z / (1 + eta (z - 1)),
///   (z)_qeta = (z)_q / (1 + eta (z - 1)_q).
/// Throws DenominatorVanishes when a concrete parameter choice zeroes a denominator.
RatFunc deformed_number(long z, DeformedKind kind, const DeformationParams& params = {});

/// (1)_kind (2)_kind ... (n)_kind, with the empty product 1 for n = 0.
RatFunc deformed_factorial(long n, DeformedKind kind, const DeformationParams& params = {});

/// (a)_kind (a+1)_kind ... (a+k-1)_kind; the classical kind is the rising factorial.
RatFunc pochhammer(long a, long k, DeformedKind kind, const DeformationParams& params = {});

/// Checks (z)_{q->1, eta} = (z)_eta (exact limit) and (z)_{q, eta=0} = (z)_q.
CheckReport specialize_number(long z, const DeformationParams& params = {});

}  // namespace defcalc

#endif  // DEFCALC_DEFORMED_NUMBERS_HPP
