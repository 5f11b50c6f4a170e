#include <gtest/gtest.h>

#include "defcalc/deformed_functions.hpp"
#include "defcalc/errors.hpp"

namespace defcalc {
namespace {

const RatFunc q = RatFunc::symbol("q");
const RatFunc eta = RatFunc::symbol("eta");

// (1 - q^z)/(1 - q) assembled literally from the defining fraction, with no
// geometric-sum shortcut; an independent route to (z)_q.
RatFunc q_number_oracle(long z) {
  const SparsePoly qp = SparsePoly::variable("q");
  if (z >= 0) return RatFunc(SparsePoly(1) - qp.pow(static_cast<unsigned>(z)), SparsePoly(1) - qp);
  const auto m = static_cast<unsigned>(-z);
  return RatFunc(qp.pow(m) - SparsePoly(1), qp.pow(m) * (SparsePoly(1) - qp));
}

RatFunc qeta_number_oracle(long z) { return q_number_oracle(z) / (RatFunc(1) + eta * q_number_oracle(z - 1)); }

TEST(DeformedNumber, FixedPointsOfEveryKind) {
  for (auto kind : {DeformedKind::classical, DeformedKind::q, DeformedKind::eta, DeformedKind::q_eta}) {
    EXPECT_EQ(deformed_number(1, kind), RatFunc(1)) << to_string(kind);
    EXPECT_EQ(deformed_number(0, kind), RatFunc(0)) << to_string(kind);
  }
}

TEST(DeformedNumber, Examples) {
  EXPECT_EQ(deformed_number(3, DeformedKind::q), RatFunc(1) + q + q * q);
  EXPECT_EQ(deformed_number(2, DeformedKind::q_eta), (RatFunc(1) + q) / (RatFunc(1) + eta));
  EXPECT_EQ(deformed_number(-1, DeformedKind::q), RatFunc(-1) / q);
  EXPECT_EQ(deformed_number(4, DeformedKind::eta), RatFunc(4) / (RatFunc(1) + eta * 3));
}

TEST(DeformedNumber, MatchesDefiningFraction) {
  for (long z = -6; z <= 6; ++z) {
    EXPECT_EQ(deformed_number(z, DeformedKind::q), q_number_oracle(z)) << z;
    EXPECT_EQ(deformed_number(z, DeformedKind::q_eta), qeta_number_oracle(z)) << z;
  }
}

TEST(DeformedNumber, ConcreteParameters) {
  EXPECT_EQ(deformed_number(5, DeformedKind::q, {RatFunc(2), eta}), RatFunc(31));
  // q = 1 gives the removable-singularity value z.
  EXPECT_EQ(deformed_number(5, DeformedKind::q, {RatFunc(1), eta}), RatFunc(5));
  EXPECT_THROW(deformed_number(2, DeformedKind::q_eta, {q, RatFunc(-1)}), DenominatorVanishes);
  EXPECT_THROW(deformed_number(3, DeformedKind::eta, {q, RatFunc(Rational(-1, 2))}), DenominatorVanishes);
  EXPECT_THROW(deformed_number(-2, DeformedKind::q, {RatFunc(0), eta}), DenominatorVanishes);
}

TEST(DeformedNumber, SpecializationsOverRange) {
  for (long z = -6; z <= 6; ++z) {
    const RatFunc qeta = deformed_number(z, DeformedKind::q_eta);
    EXPECT_EQ(substitute(qeta, "eta", RatFunc(0)), deformed_number(z, DeformedKind::q)) << z;
    EXPECT_EQ(limit(qeta, "q", Rational(1)), deformed_number(z, DeformedKind::eta)) << z;
    EXPECT_TRUE(specialize_number(z).passed()) << z;
  }
}

TEST(SpecializeNumber, ReportCarriesBothSides) {
  const auto r = specialize_number(5);
  ASSERT_TRUE(r.passed());
  EXPECT_EQ((*r.witness)["qeta_at_q1"], "5/(1+4*eta)");
  EXPECT_EQ((*r.witness)["eta_number"], "5/(1+4*eta)");
  EXPECT_TRUE(specialize_number(0).passed());
  EXPECT_EQ((*specialize_number(1).witness)["q_number"], "1");
}

TEST(DeformedFactorial, Examples) {
  for (auto kind : {DeformedKind::classical, DeformedKind::q, DeformedKind::eta, DeformedKind::q_eta}) {
    EXPECT_EQ(deformed_factorial(0, kind), RatFunc(1));
  }
  const RatFunc expected = (RatFunc(1) + q) / (RatFunc(1) + eta) * (RatFunc(1) + q + q * q) /
                           (RatFunc(1) + eta * (RatFunc(1) + q));
  EXPECT_EQ(deformed_factorial(3, DeformedKind::q_eta), expected);
  const DeformationParams undeformed{RatFunc(1), RatFunc(0)};
  EXPECT_EQ(deformed_factorial(6, DeformedKind::q_eta, undeformed), RatFunc(720));
  EXPECT_THROW(deformed_factorial(-1, DeformedKind::q), InvalidArgument);
}

TEST(DeformedFactorial, RatioIsDeformedNumber) {
  for (auto kind : {DeformedKind::classical, DeformedKind::q, DeformedKind::eta, DeformedKind::q_eta}) {
    for (long n = 1; n <= 8; ++n) {
      EXPECT_EQ(deformed_factorial(n, kind) / deformed_factorial(n - 1, kind), deformed_number(n, kind));
    }
  }
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(7, 0, DeformedKind::q_eta), RatFunc(1));
  EXPECT_EQ(pochhammer(2, 3, DeformedKind::classical), RatFunc(24));
  EXPECT_EQ(pochhammer(1, 2, DeformedKind::q_eta), (RatFunc(1) + q) / (RatFunc(1) + eta));
  EXPECT_EQ(pochhammer(-2, 3, DeformedKind::classical), RatFunc(0));
}

TEST(ExpSeries, Examples) {
  const auto c = exp_series(DeformedKind::classical, {}, 4);
  const std::vector<Rational> expected{1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)};
  ASSERT_EQ(c.size(), expected.size());
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(c[k], RatFunc(expected[k]));

  const auto qe = exp_series(DeformedKind::q_eta, {}, 3);
  EXPECT_EQ(qe[2], (RatFunc(1) + eta) / (RatFunc(1) + q));

  const auto at_eta0 = exp_series(DeformedKind::q_eta, {q, RatFunc(0)}, 8);
  const auto qs = exp_series(DeformedKind::q, {}, 8);
  for (std::size_t k = 0; k < qs.size(); ++k) EXPECT_EQ(at_eta0[k], qs[k]);
}

TEST(ExpSeries, ConsecutiveRatio) {
  for (auto kind : {DeformedKind::classical, DeformedKind::q, DeformedKind::eta, DeformedKind::q_eta}) {
    const auto c = exp_series(kind, {}, 8);
    EXPECT_EQ(c[0], RatFunc(1));
    for (long n = 1; n <= 8; ++n) {
      EXPECT_EQ(c[static_cast<std::size_t>(n)] * deformed_number(n, kind), c[static_cast<std::size_t>(n - 1)]);
    }
  }
}

TEST(HypergeometricSeries, Examples) {
  const auto e = exp_series(DeformedKind::q_eta, {}, 5);
  const auto h0 = hypergeometric_series({{}, {}, DeformedKind::q_eta, 5});
  for (std::size_t k = 0; k < e.size(); ++k) EXPECT_EQ(h0[k], e[k]);

  const auto geo = hypergeometric_series({{1}, {}, DeformedKind::classical, 6});
  for (const auto& c : geo) EXPECT_EQ(c, RatFunc(1));

  const auto h = hypergeometric_series({{2}, {1}, DeformedKind::q_eta, 2});
  EXPECT_EQ(h[1], (RatFunc(1) + q) / (RatFunc(1) + eta));
}

TEST(HypergeometricSeries, DirectProductFormula) {
  // Coefficient-by-coefficient from Pochhammer products, not the running ratio.
  const SeriesSpec spec{{2, -3}, {4}, DeformedKind::q_eta, 5};
  const auto h = hypergeometric_series(spec);
  for (long k = 0; k <= spec.order; ++k) {
    const RatFunc direct = pochhammer(2, k, spec.kind) * pochhammer(-3, k, spec.kind) /
                           (deformed_factorial(k, spec.kind) * pochhammer(4, k, spec.kind));
    EXPECT_EQ(h[static_cast<std::size_t>(k)], direct) << k;
  }
}

TEST(HypergeometricSeries, MatchedParametersGiveExponential) {
  for (auto kind : {DeformedKind::q, DeformedKind::eta, DeformedKind::q_eta}) {
    const auto h = hypergeometric_series({{2, 5}, {2, 5}, kind, 6});
    const auto e = exp_series(kind, {}, 6);
    for (std::size_t k = 0; k < e.size(); ++k) EXPECT_EQ(h[k], e[k]);
  }
}

TEST(HypergeometricSeries, ZeroLowerPochhammer) {
  EXPECT_THROW(hypergeometric_series({{1}, {-1}, DeformedKind::classical, 3}), ZeroLowerPochhammer);
  EXPECT_THROW(hypergeometric_series({{1}, {0}, DeformedKind::q_eta, 1}), ZeroLowerPochhammer);
  EXPECT_NO_THROW(hypergeometric_series({{1}, {-1}, DeformedKind::classical, 1}));
}

TEST(SpecializeSeries, Examples) {
  EXPECT_TRUE(specialize_series({{}, {}, DeformedKind::q_eta, 8}, DeformedKind::eta).passed());
  EXPECT_TRUE(specialize_series({{}, {}, DeformedKind::q, 8}, DeformedKind::classical).passed());
  EXPECT_TRUE(specialize_series({{2}, {3}, DeformedKind::q_eta, 6}, DeformedKind::q).passed());
  EXPECT_TRUE(specialize_series({{2}, {3}, DeformedKind::eta, 6}, DeformedKind::classical).passed());
  EXPECT_THROW(specialize_series({{}, {}, DeformedKind::q, 3}, DeformedKind::eta), InvalidArgument);
}

}  // namespace
}  // namespace defcalc
