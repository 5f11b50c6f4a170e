#include <gtest/gtest.h>

#include "defcalc/errors.hpp"
#include "defcalc/kz_dd.hpp"

namespace defcalc {
namespace {

RatFunc sym(const std::string& n) { return RatFunc::symbol(n); }

KZContext vector_context(int M, int N, KZParams p = {}) {
  return KZContext::from_tensor(TensorContext::uniform(vector_rep(M), N), std::move(p));
}

RationalMatrix flip22() {
  RationalMatrix f = RationalMatrix::Zero(4, 4);
  f(0, 0) = f(1, 2) = f(2, 1) = f(3, 3) = Rational(1);
  return f;
}

TEST(DiffOp, CanonicalCommutation) {
  const DiffOp d = DiffOp::partial("z1", RatFunc(1), 2);
  const DiffOp z = DiffOp::matrix(lift(RationalMatrix::Identity(2, 2)) * sym("z1"));
  const DiffOp c = commutator(d, z);
  EXPECT_EQ(c.terms().size(), 1U);
  EXPECT_TRUE(equal<RatFunc>(c.coefficient({}), lift(RationalMatrix::Identity(2, 2))));
  EXPECT_TRUE(commutator(d, d).is_zero());
}

TEST(DiffOp, SecondOrderLeibniz) {
  // d^2 o f = f d^2 + 2 f' d + f''
  const DiffOp d = DiffOp::partial("x", RatFunc(1), 1);
  const RatFunc f = sym("x").pow(3);
  const DiffOp fo = DiffOp::matrix(RatFuncMatrix::Constant(1, 1, f));
  const DiffOp lhs = compose(compose(d, d), fo);
  EXPECT_EQ(lhs.coefficient({{"x", 2}})(0, 0), f);
  EXPECT_EQ(lhs.coefficient({{"x", 1}})(0, 0), RatFunc(6) * sym("x").pow(2));
  EXPECT_EQ(lhs.coefficient({})(0, 0), RatFunc(6) * sym("x"));
  EXPECT_TRUE(commutator(lhs, lhs).is_zero());
}

TEST(DiffOp, PointwiseCommutatorMatchesSymbolic) {
  const auto ctx = vector_context(2, 2);
  const DiffOp a = build_kz(OpKind::t, 0, ctx), b = build_dd(OpKind::t, 1, ctx);
  const Assignment pt{{"eta", Rational(2)}, {"hbar", Rational(3)}, {"kappa", Rational(5, 7)}, {"lambda1", Rational(1, 3)},
                      {"lambda2", Rational(7, 2)}, {"z1", Rational(4)}, {"z2", Rational(-1, 5)}};
  const EvaluatedOp direct = evaluate(commutator(a, b), pt);
  const EvaluatedOp fast = commutator_at(a, b, pt);
  ASSERT_EQ(direct.size(), fast.size());
  for (const auto& [d, m] : direct) EXPECT_TRUE(equal<Rational>(m, fast.at(d))) << to_string(d);
}

TEST(BuildKZ, SingleSiteHasNoPoles) {
  const auto ctx = vector_context(2, 1);
  const DiffOp op = build_kz(OpKind::r, 0, ctx);
  RatFuncMatrix expected = RatFuncMatrix::Zero(2, 2);
  expected(0, 0) = -sym("lambda1");
  expected(1, 1) = -sym("lambda2");
  EXPECT_TRUE(equal<RatFunc>(op.coefficient({}), expected));
  EXPECT_EQ(op.coefficient({{"z1", 1}})(0, 0), sym("kappa"));
  EXPECT_THROW(build_kz(OpKind::r, 1, ctx), IndexOutOfRange);
}

TEST(BuildKZ, RationalAtPointIsFlip) {
  const auto ctx = vector_context(2, 2, {RatFunc(1), sym("hbar"), sym("eta")});
  const DiffOp op = build_kz(OpKind::r, 0, ctx);
  const RationalMatrix m = evaluate(op.coefficient({}), {{"z1", Rational(0)}, {"z2", Rational(1)},
                                                        {"lambda1", Rational(0)}, {"lambda2", Rational(0)}});
  EXPECT_TRUE(equal<Rational>(m, flip22()));
}

TEST(BuildKZ, TwoPointFlatnessByHand) {
  const auto ctx = vector_context(2, 2);
  const RatFuncMatrix om = lift(flip22());
  const DiffOp a = DiffOp::partial("z1", sym("kappa"), 4) - DiffOp::matrix(scaled(RatFunc(1) / (sym("z1") - sym("z2")), om));
  const DiffOp b = DiffOp::partial("z2", sym("kappa"), 4) - DiffOp::matrix(scaled(RatFunc(1) / (sym("z2") - sym("z1")), om));
  EXPECT_TRUE(commutator(a, b).is_zero());
}

TEST(BuildKZ, RejectsDegenerateParameters) {
  EXPECT_THROW(vector_context(2, 2, {RatFunc(0), sym("hbar"), sym("eta")}), InvalidArgument);
  EXPECT_THROW(vector_context(2, 2, {sym("kappa"), RatFunc(0), sym("eta")}), InvalidArgument);
}

TEST(BuildDD, SingleRankHasNoPairTerms) {
  const auto ctx = vector_context(1, 3);
  const DiffOp op = build_dd(OpKind::r, 0, ctx);
  RatFuncMatrix expected = RatFuncMatrix::Zero(1, 1);
  expected(0, 0) = -(sym("z1") + sym("z2") + sym("z3"));
  EXPECT_TRUE(equal<RatFunc>(op.coefficient({}), expected));
}

TEST(BuildDD, ExplicitTwoByTwo) {
  // M=2, N=1: e12 e21 - e11 vanishes on the vector module, leaving -3 E11.
  const auto ctx = vector_context(2, 1);
  const DiffOp op = build_dd(OpKind::r, 0, ctx);
  const RationalMatrix m =
      evaluate(op.coefficient({}), {{"z1", Rational(3)}, {"lambda1", Rational(0)}, {"lambda2", Rational(1)}});
  EXPECT_TRUE(equal<Rational>(m, elementary(2, 0, 0) * Rational(-3)));
  EXPECT_EQ(op.coefficient({{"lambda1", 1}})(1, 1), sym("kappa"));
  EXPECT_THROW(build_dd(OpKind::r, 2, ctx), IndexOutOfRange);
}

TEST(Identities, DecompositionExactUpToThree) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const auto ctx = vector_context(m, n);
      EXPECT_TRUE(check_identity(Identity::eq30, OpKind::rt, ctx).passed()) << m << n;
      EXPECT_TRUE(check_identity(Identity::eq35, OpKind::rt, ctx).passed()) << m << n;
    }
  }
}

TEST(Identities, DecompositionWithSymmetricSquare) {
  const auto ctx = KZContext::from_tensor(TensorContext({symmetric_power_rep(2, 2), vector_rep(2)}));
  EXPECT_TRUE(check_identity(Identity::eq30, OpKind::rt, ctx).passed());
  EXPECT_TRUE(check_identity(Identity::eq35, OpKind::rt, ctx).passed());
}

TEST(Identities, LinearInHbarEta) {
  const std::vector<std::pair<Rational, Rational>> pts{{Rational(1), Rational(2)}, {Rational(-3, 2), Rational(5)},
                                                       {Rational(7), Rational(-1, 3)}};
  for (const auto& [h, e] : pts) {
    const auto ctx = vector_context(2, 2, {sym("kappa"), RatFunc(h), RatFunc(e)});
    EXPECT_TRUE(check_identity(Identity::eq30, OpKind::rt, ctx).passed());
    EXPECT_TRUE(check_identity(Identity::eq35, OpKind::rt, ctx).passed());
  }
}

TEST(Identities, FlatnessExactTwoByTwo) {
  const auto ctx = vector_context(2, 2);
  for (auto kind : {OpKind::r, OpKind::t, OpKind::rt}) {
    const auto r = check_identity(Identity::flatness, kind, ctx);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
  }
}

TEST(Identities, FlatnessProbabilisticThreeSites) {
  const auto ctx = vector_context(2, 3);
  for (auto kind : {OpKind::r, OpKind::t, OpKind::rt}) {
    const auto r = check_identity(Identity::flatness, kind, ctx, CheckMode::probabilistic(7, 5));
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_EQ(r.parameters["seed"], 7);
    EXPECT_EQ(r.parameters["trials"], 5);
  }
}

TEST(Identities, RationalCompatibility) {
  EXPECT_TRUE(check_identity(Identity::compat, OpKind::r, vector_context(2, 2)).passed());
  EXPECT_TRUE(check_identity(Identity::compat, OpKind::r, vector_context(2, 3), CheckMode::probabilistic(3, 3)).passed());
}

TEST(Identities, TrigonometricCompatibilityFailsLiterally) {
  // Recorded behaviour, not a claim of the construction: with bare e_aa read
  // as the coproduct, [KZ^t_i, DD^t_a] does not vanish.
  const auto r = check_identity(Identity::compat, OpKind::t, vector_context(2, 2));
  EXPECT_EQ(r.status, Status::fail);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->contains("residual"));
}

TEST(Identities, PerturbedOperatorIsCaught) {
  // Negative control: an extra z1-dependent term breaks two-site flatness.
  const auto ctx = vector_context(2, 2);
  const DiffOp a = build_kz(OpKind::r, 0, ctx);
  const DiffOp b = build_kz(OpKind::r, 1, ctx) + DiffOp::matrix(scaled(sym("z1"), elementary(4, 0, 1)));
  EXPECT_FALSE(commutator(a, b).is_zero());
  const Assignment pt{{"kappa", Rational(2)}, {"lambda1", Rational(1)}, {"lambda2", Rational(3)},
                      {"z1", Rational(5)}, {"z2", Rational(7)}};
  EXPECT_FALSE(is_zero(commutator_at(a, b, pt)));
}

}  // namespace
}  // namespace defcalc
