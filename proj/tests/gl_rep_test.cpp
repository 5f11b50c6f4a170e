#include <gtest/gtest.h>

#include "defcalc/errors.hpp"
#include "defcalc/gl_rep.hpp"

namespace defcalc {
namespace {

RationalMatrix diag(std::initializer_list<long> d) {
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index k = 0;
  for (long x : d) {
    m(k, k) = Rational(x);
    ++k;
  }
  return m;
}

RationalMatrix scalar(Eigen::Index n, long c) { return RationalMatrix::Identity(n, n) * Rational(c); }

TEST(RepSpace, VectorExamples) {
  const auto v = vector_rep(2);
  EXPECT_EQ(v.dim(), 2);
  EXPECT_EQ(v.e(1, 0)(1, 0), Rational(1));
  EXPECT_TRUE(v.e(1, 0)(0, 1).is_zero());
  EXPECT_THROW(vector_rep(0), InvalidArgument);
}

TEST(RepSpace, SymmetricPowerExamples) {
  const auto s = symmetric_power_rep(2, 2);
  EXPECT_EQ(s.basis_labels(), (std::vector<std::string>{"x1^2", "x1*x2", "x2^2"}));
  EXPECT_TRUE(equal<Rational>(s.e(0, 0), diag({2, 1, 0})));
  // e_12 = x1 d/dx2: x1 x2 -> x1^2, x2^2 -> 2 x1 x2
  EXPECT_EQ(s.e(0, 1)(0, 1), Rational(1));
  EXPECT_EQ(s.e(0, 1)(1, 2), Rational(2));
  for (int m = 1; m <= 3; ++m) {
    const auto s1 = symmetric_power_rep(m, 1), v = vector_rep(m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) EXPECT_TRUE(equal<Rational>(s1.e(a, b), v.e(a, b)));
    }
  }
  EXPECT_EQ(symmetric_power_rep(3, 0).dim(), 1);
  EXPECT_EQ(parse_module("sym:3", 2).dim(), 4);
  EXPECT_THROW(parse_module("sym:x", 2), InvalidArgument);
}

TEST(RepSpace, RejectsBrokenAction) {
  Generators e{{diag({1, 0}), diag({0, 0})}, {diag({0, 0}), diag({1, 1})}};
  e[0][1](0, 1) = Rational(1);
  EXPECT_THROW(RepSpace("broken", {"a", "b"}, e), InvalidArgument);
}

TEST(RepSpace, RelationsUpToRankFour) {
  for (int m = 1; m <= 4; ++m) {
    EXPECT_TRUE(relation_violations(vector_rep(m).generators()).empty());
    EXPECT_TRUE(relation_violations(symmetric_power_rep(m, 2).generators()).empty());
  }
}

TEST(Tensor, EmbedExamples) {
  const auto ctx = TensorContext::uniform(vector_rep(2), 2);
  EXPECT_TRUE(equal<Rational>(embed_at(0, 0, 1, ctx), diag({1, 0, 1, 0})));
  EXPECT_TRUE(equal<Rational>(embed_at(0, 0, 0, ctx), diag({1, 1, 0, 0})));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          EXPECT_TRUE(is_zero<Rational>(commutator(embed_at(a, b, 0, ctx), embed_at(c, d, 1, ctx))));
        }
      }
    }
  }
  EXPECT_THROW(embed_at(0, 0, 2, ctx), IndexOutOfRange);
  EXPECT_THROW(embed_at(2, 0, 0, ctx), IndexOutOfRange);
  const auto single = TensorContext::uniform(symmetric_power_rep(2, 2), 1);
  EXPECT_TRUE(equal<Rational>(embed_at(0, 1, 0, single), symmetric_power_rep(2, 2).e(0, 1)));
  EXPECT_TRUE(equal<Rational>(coproduct_embed(0, 1, single), symmetric_power_rep(2, 2).e(0, 1)));
}

TEST(Tensor, CoproductEigenvalue) {
  const auto ctx = TensorContext::uniform(vector_rep(2), 2);
  // v1 x v1 is basis vector 0.
  EXPECT_EQ(coproduct_embed(0, 0, ctx)(0, 0), Rational(2));
  const auto mixed = TensorContext({symmetric_power_rep(2, 2), vector_rep(2)});
  EXPECT_EQ(mixed.total_dim(), 6);
  EXPECT_TRUE(relations_check(mixed.action()).passed());
}

TEST(Casimir, Examples) {
  EXPECT_TRUE(equal<Rational>(casimir_c2(vector_rep(2)), scalar(2, 2)));
  EXPECT_TRUE(equal<Rational>(casimir_c2(symmetric_power_rep(2, 2)), scalar(3, 6)));
}

TEST(Casimir, SymmetricPowerEigenvalue) {
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= 3; ++k) {
      const auto s = symmetric_power_rep(m, k);
      EXPECT_TRUE(equal<Rational>(casimir_c2(s), scalar(s.dim(), k * (k + m - 1)))) << m << " " << k;
    }
  }
}

TEST(Casimir, CentralOnTensors) {
  for (int m = 1; m <= 3; ++m) {
    EXPECT_TRUE(casimir_centrality_check(TensorContext::uniform(vector_rep(m), 2).action()).passed());
  }
  EXPECT_TRUE(casimir_centrality_check(TensorContext({symmetric_power_rep(2, 2), vector_rep(2), vector_rep(2)}).action()).passed());
}

TEST(Omega, FlipByHand) {
  const auto ctx = TensorContext::uniform(vector_rep(2), 2);
  RationalMatrix f = RationalMatrix::Zero(4, 4);
  f(0, 0) = f(1, 2) = f(2, 1) = f(3, 3) = Rational(1);
  EXPECT_TRUE(equal<Rational>(omega_tensors(ctx, 0, 1).omega, f));
  EXPECT_THROW(omega_tensors(ctx, 1, 1), SameSlot);
  EXPECT_THROW(omega_tensors(ctx, 0, 2), IndexOutOfRange);
}

TEST(Omega, FlipUpToRankFour) {
  for (int m = 1; m <= 4; ++m) EXPECT_TRUE(omega_flip_check(TensorContext::uniform(vector_rep(m), 2)).passed()) << m;
  EXPECT_TRUE(omega_flip_check(TensorContext::uniform(vector_rep(2), 3)).passed());
}

TEST(Omega, DecompositionsAndInvariance) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& ctx : {TensorContext::uniform(vector_rep(m), 2), TensorContext({symmetric_power_rep(m, 2), vector_rep(m)})}) {
      EXPECT_TRUE(omega_decomposition_check(ctx.action()).passed());
      EXPECT_TRUE(omega_casimir_check(ctx.action()).passed());
      EXPECT_TRUE(omega_invariance_check(ctx.action()).passed());
      EXPECT_TRUE(cartan_automorphism_check(ctx.action()).passed());
    }
  }
}

TEST(Omega, BraidRelationsFourSlots) {
  const auto r = braid_check(TensorContext::uniform(vector_rep(2), 4).action());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ((*r.witness)["relations_checked"], 6 * 2 + 6 * 1);
}

TEST(Omega, PlusIsNotMinus) {
  // Sanity: the halves differ at M = 2, so the Cartan check is not vacuous.
  const auto o = omega_tensors(TensorContext::uniform(vector_rep(2), 2), 0, 1);
  EXPECT_FALSE(equal<Rational>(o.plus, o.minus));
}

TEST(GlStructure, AllChecksPass) {
  for (const auto& r : gl_structure_checks(TensorContext::uniform(vector_rep(3), 3))) {
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
  }
  EXPECT_EQ(gl_structure_checks(TensorContext::uniform(vector_rep(2), 1)).size(), 3U);
}

}  // namespace
}  // namespace defcalc
