#ifndef DEFCALC_SAMPLER_HPP
#define DEFCALC_SAMPLER_HPP

#include <cstdint>
#include <random>

#include <nlohmann/json.hpp>

#include "defcalc/sparse_poly.hpp"

namespace defcalc {

/// Seeded source of random positive rationals p/q, p and q in [1, 10^6].
/// The reduction from the raw 64-bit stream is done by hand so the sequence
/// is identical across standard libraries.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    const auto p = static_cast<long>(rng_() % 1000000U) + 1;
    const auto q = static_cast<long>(rng_() % 1000000U) + 1;
    return Rational(p, q);
  }

  template <class Range>
  Assignment sample(const Range& vars) {
    Assignment point;
    for (const auto& v : vars) point[v] = next();
    return point;
  }

 private:
  std::mt19937_64 rng_;
};

inline nlohmann::ordered_json point_json(const Assignment& point) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : point) j[k] = v.to_string();
  return j;
}

}  // namespace defcalc

#endif  // DEFCALC_SAMPLER_HPP
