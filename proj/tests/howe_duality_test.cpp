#include <gtest/gtest.h>

#include "defcalc/errors.hpp"
#include "defcalc/howe_duality.hpp"

namespace defcalc {
namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Diagonal matrix of a function of the exponent vector.
template <class F>
RationalMatrix diagonal_of(const PolynomialModel& m, int k, F f) {
  RationalMatrix out = RationalMatrix::Zero(m.stratum_dim(k), m.stratum_dim(k));
  for (Eigen::Index r = 0; r < out.rows(); ++r) out(r, r) = f(m.basis()[static_cast<std::size_t>(m.stratum_offset(k) + r)]);
  return out;
}

TEST(PolynomialModel, StratumDimensions) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const PolynomialModel model(n, m, 3);
      for (int k = 0; k <= 3; ++k) EXPECT_EQ(model.stratum_dim(k), binomial(n * m + k - 1, k)) << n << m << k;
    }
  }
  EXPECT_THROW(PolynomialModel(0, 2, 1), InvalidArgument);
  EXPECT_THROW(PolynomialModel(2, 2, -1), InvalidArgument);
}

TEST(PolynomialModel, SingleVariableDegreeOperator) {
  const PolynomialModel model(1, 1, 2);
  RationalMatrix expected = RationalMatrix::Zero(3, 3);
  expected(1, 1) = Rational(1);
  expected(2, 2) = Rational(2);
  EXPECT_TRUE(equal<Rational>(model.gl_M_action()->at(0, 0, 0), expected));
  EXPECT_TRUE(equal<Rational>(model.gl_N_action()->at(0, 0, 0), expected));
}

TEST(PolynomialModel, RaisingOperatorOnLinearStratum) {
  const PolynomialModel model(2, 2, 1);
  EXPECT_EQ(model.basis_labels(), (std::vector<std::string>{"1", "x11", "x12", "x21", "x22"}));
  RationalMatrix expected = RationalMatrix::Zero(5, 5);
  expected(1, 2) = Rational(1);  // x12 -> x11
  expected(3, 4) = Rational(1);  // x22 -> x21
  EXPECT_TRUE(equal<Rational>(model.gl_M_action()->coproduct(0, 1), expected));
}

TEST(PolynomialModel, ActionsSatisfyRelationsAndCommute) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const auto r = model_check(PolynomialModel(n, m, 3));
      EXPECT_TRUE(r.passed()) << r.to_json().dump();
    }
  }
}

TEST(Realization, SingleRowRationalIdentity) {
  for (int m = 1; m <= 3; ++m) {
    const PolynomialModel model(1, m, 2);
    const DiffOp kz = realize_kz_on_model(OpKind::r, 0, model, {});
    const DiffOp dd = realize_dd_on_model(OpKind::r, 0, model, {}, true);
    EXPECT_TRUE((kz - dd).is_zero()) << m;
    EXPECT_EQ(kz.coefficient({{"z1", 1}})(0, 0), RatFunc::symbol("kappa"));
  }
}

TEST(Realization, BlockDiagonal) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}}) {
    const auto r = block_diagonal_check(PolynomialModel(n, m, 2));
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
  }
}

TEST(Duality, RationalResidualVanishes) {
  for (int m = 1; m <= 3; ++m) {
    const auto r = check_duality(OpKind::r, PolynomialModel(1, m, 3));
    EXPECT_TRUE(r.report.passed()) << m;
    EXPECT_TRUE(r.residuals.empty());
  }
  for (int d = 1; d <= 3; ++d) {
    const auto r = check_duality(OpKind::r, PolynomialModel(2, 2, d));
    EXPECT_TRUE(r.report.passed()) << d;
    EXPECT_EQ(r.report.witness->at("strata").size(), static_cast<std::size_t>(4 * (d + 1)));
  }
}

TEST(Duality, RationalResidualProbabilistic) {
  const auto r = check_duality(OpKind::r, PolynomialModel(2, 2, 2), {}, CheckMode::probabilistic(7, 5));
  EXPECT_TRUE(r.report.passed());
  EXPECT_EQ(r.report.parameters["seed"], 7);
}

TEST(Duality, RequiresPositiveDegree) {
  EXPECT_THROW(check_duality(OpKind::r, PolynomialModel(2, 2, 0)), InvalidArgument);
}

TEST(Duality, LinearityHoldsWhateverTheResiduals) {
  for (auto [n, m, d] : std::vector<std::tuple<int, int, int>>{{1, 3, 2}, {2, 2, 3}, {2, 1, 2}}) {
    const auto r = duality_linearity_check(PolynomialModel(n, m, d));
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
  }
  const KZParams numeric{RatFunc(Rational(3, 2)), RatFunc(Rational(-2)), RatFunc(Rational(5))};
  EXPECT_TRUE(duality_linearity_check(PolynomialModel(2, 2, 2), numeric).passed());
}

// Observed on the model: the trigonometric residual is a constant diagonal
// operator, +1/2 sum_a Delta(e_aa)(e_aa)_(i) on the first identification and
// -1/2 sum_i Delta(E_ii)(E_ii)_(a) on the second.
TEST(Duality, TrigonometricResidualIsCartanShift) {
  const PolynomialModel model(2, 3, 2);
  const auto rep = check_duality(OpKind::t, model);
  EXPECT_EQ(rep.report.status, Status::fail);
  ASSERT_TRUE(rep.report.witness->contains("residuals"));
  EXPECT_EQ(rep.residuals.size(), static_cast<std::size_t>((2 + 3) * 2));
  const int M = model.M(), N = model.N();
  for (const auto& s : rep.residuals) {
    ASSERT_EQ(s.residual.terms().size(), 1U);
    const RatFuncMatrix c = s.residual.coefficient({});
    RationalMatrix expected;
    if (s.identification == "kz(gl_M) = dd(gl_N)") {
      expected = diagonal_of(model, s.degree, [&](const std::vector<int>& e) {
        long v = 0;
        for (int a = 0; a < M; ++a) {
          long col = 0;
          for (int j = 0; j < N; ++j) col += e[static_cast<std::size_t>(model.variable(j, a))];
          v += e[static_cast<std::size_t>(model.variable(s.index, a))] * col;
        }
        return Rational(v, 2);
      });
    } else {
      expected = diagonal_of(model, s.degree, [&](const std::vector<int>& e) {
        long v = 0;
        for (int i = 0; i < N; ++i) {
          long row = 0;
          for (int b = 0; b < M; ++b) row += e[static_cast<std::size_t>(model.variable(i, b))];
          v += e[static_cast<std::size_t>(model.variable(i, s.index))] * row;
        }
        return Rational(-v, 2);
      });
    }
    EXPECT_TRUE(equal<RatFunc>(c, lift(expected))) << s.identification << " " << s.index << " " << s.degree;
  }
}

TEST(Duality, RationalTrigonometricResidualIsScaledTrigonometric) {
  const PolynomialModel model(2, 2, 2);
  const auto t = check_duality(OpKind::t, model);
  const auto rt = check_duality(OpKind::rt, model);
  ASSERT_EQ(t.residuals.size(), rt.residuals.size());
  for (std::size_t k = 0; k < t.residuals.size(); ++k) {
    EXPECT_TRUE((rt.residuals[k].residual - RatFunc::symbol("hbar") * t.residuals[k].residual).is_zero());
  }
}

}  // namespace
}  // namespace defcalc
