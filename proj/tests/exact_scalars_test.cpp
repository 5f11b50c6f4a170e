#include <gtest/gtest.h>

#include <random>

#include "defcalc/errors.hpp"
#include "defcalc/rat_func.hpp"

namespace defcalc {
namespace {

SparsePoly var(const std::string& n) { return SparsePoly::variable(n); }
RatFunc sym(const std::string& n) { return RatFunc::symbol(n); }

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rational::parse("abc"), InvalidArgument);
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
}

TEST(SymbolOrder, NumericSuffix) {
  EXPECT_TRUE(symbol_less("z2", "z10"));
  EXPECT_TRUE(symbol_less("lambda1", "q"));
  EXPECT_TRUE(symbol_less("eta", "hbar"));
  EXPECT_FALSE(symbol_less("z1", "z1"));
}

TEST(PolyArith, DifferenceOfSquares) {
  const auto x = var("x");
  EXPECT_EQ((x + 1) * (x - 1), x * x - 1);
  const auto q = var("q"), eta = var("eta");
  EXPECT_EQ((q + eta) * (q - eta), q * q - eta * eta);
  const auto p = x * x * var("y") + Rational(3, 2) * x;
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE((p - p).vars().empty());
}

TEST(PolyArith, GrlexLeadingTerm) {
  const auto p = var("z1") - var("z2");
  EXPECT_EQ(p.leading_coefficient(), Rational(1));
  const auto r = var("z2") - var("z1");
  EXPECT_EQ(r.leading_coefficient(), Rational(-1));
  const auto s = var("x") + var("y") * var("y");
  EXPECT_EQ(s.total_degree(), 2);
  EXPECT_EQ(s.to_string(), "x+y^2");
}

TEST(PolyDerivative, PowerRuleAndLinearity) {
  const auto x = var("x"), y = var("y");
  EXPECT_EQ(derivative(x.pow(3), "x"), SparsePoly(3) * x * x);
  EXPECT_TRUE(derivative(x.pow(3), "y").is_zero());
  EXPECT_EQ(derivative(x * y + x, "x"), y + 1);
}

TEST(PolyDivision, ExactAndInexact) {
  const auto x = var("x"), y = var("y");
  const auto f = (x - y) * (x * x + y + 3);
  EXPECT_EQ(*f.divide_exact(x - y), x * x + y + 3);
  EXPECT_FALSE(f.divide_exact(x + y).has_value());
  EXPECT_FALSE((x + 1).divide_exact(y).has_value());
}

TEST(PolyJson, ExponentKeys) {
  const auto p = var("x") * var("x") * Rational(1, 2) + var("y");
  const auto j = p.to_json();
  EXPECT_EQ(j["vars"], nlohmann::ordered_json({"x", "y"}));
  EXPECT_EQ(j["terms"]["2,0"], "1/2");
  EXPECT_EQ(j["terms"]["0,1"], "1");
}

TEST(RatFuncArith, QuotientRuleOnPole) {
  const auto z1 = sym("z1"), z2 = sym("z2");
  const RatFunc f = RatFunc(1) / (z1 - z2);
  const RatFunc expected = RatFunc(-1) / ((z1 - z2) * (z1 - z2));
  EXPECT_EQ(derivative(f, "z1"), expected);
}

TEST(RatFuncArith, IdentityAndCancellation) {
  const auto q = sym("q"), eta = sym("eta");
  const RatFunc a = (q * q + eta) / (q - eta * 3);
  EXPECT_EQ(a / a, RatFunc(1));
  EXPECT_TRUE((a / a).is_constant());
  const RatFunc b = (RatFunc(1) / (RatFunc(1) - q)) * (RatFunc(1) - q);
  EXPECT_TRUE(b.is_constant());
  EXPECT_EQ(b.constant_value(), Rational(1));
  EXPECT_THROW(a / RatFunc(), DivisionByZero);
}

TEST(RatFuncArith, MonicDenominator) {
  const auto z1 = sym("z1"), z2 = sym("z2");
  const RatFunc f = RatFunc(3) / (z2 * 2 - z1 * 2);
  EXPECT_EQ(f.denominator(), SparsePoly::variable("z1") - SparsePoly::variable("z2"));
  EXPECT_EQ(f.numerator(), SparsePoly(Rational(-3, 2)));
}

TEST(RatFuncEqual, ExactAndProbabilistic) {
  const auto z = sym("z");
  const RatFunc a = (z * z - 1) / (z - 1);
  const RatFunc b = z + 1;
  EXPECT_TRUE(equal_exact(a, b));
  EXPECT_TRUE(equal_probabilistic(a, b, 1, 3));
  EXPECT_FALSE(equal_exact(sym("q"), sym("eta")));
  EXPECT_FALSE(equal_probabilistic(sym("q"), sym("eta"), 1, 3));
  EXPECT_THROW(equal_probabilistic(a, b, 1, 0), InvalidArgument);
}

TEST(RatFuncEval, SubstitutionAndPoles) {
  const auto x = sym("x");
  EXPECT_EQ(evaluate(x * x + 1, {{"x", Rational(2)}}), Rational(5));
  const RatFunc pole = RatFunc(1) / (sym("z1") - sym("z2"));
  EXPECT_THROW(evaluate(pole, {{"z1", Rational(1)}, {"z2", Rational(1)}}), PoleAtPoint);
  const auto q = sym("q");
  const RatFunc geo = (RatFunc(1) - q.pow(3)) / (RatFunc(1) - q);
  EXPECT_EQ(evaluate(geo, {{"q", Rational(2)}}), Rational(7));
  EXPECT_THROW(evaluate(x, {}), InvalidArgument);
}

TEST(RatFuncLimit, CancelsVanishingFactor) {
  const auto q = sym("q");
  // (1 - q^5) / (1 - q) written without the geometric-sum cancellation.
  const RatFunc raw(SparsePoly(1) - SparsePoly::variable("q").pow(5), SparsePoly(1) - SparsePoly::variable("q"));
  EXPECT_EQ(limit(raw, "q", Rational(1)), RatFunc(5));
  EXPECT_THROW(limit(RatFunc(1) / (q - 1), "q", Rational(1)), PoleAtPoint);
  EXPECT_TRUE(limit((q - 1) / (q + 1), "q", Rational(1)).is_zero());
}

TEST(RatFuncSubstitute, ShiftAndScale) {
  const auto z1 = sym("z1"), z2 = sym("z2"), eta = sym("eta"), hbar = sym("hbar");
  const RatFunc f = z1 / (z1 - z2);
  const RatFunc c = eta / hbar;
  const RatFunc g = substitute(substitute(f, "z1", z1 + c), "z2", z2 + c);
  EXPECT_EQ(g, (z1 + c) / (z1 - z2));
  EXPECT_THROW(substitute(f, "z1", z2), PoleAtPoint);
}

TEST(RatFuncPrint, TextForm) {
  const auto q = sym("q"), eta = sym("eta");
  EXPECT_EQ(((RatFunc(1) + q) / (RatFunc(1) + eta)).to_string(), "(1+q)/(1+eta)");
  EXPECT_EQ((RatFunc(1) / q).to_string(), "1/q");
  EXPECT_EQ(RatFunc(Rational(-3, 4)).to_string(), "-3/4");
}

// --- properties -----------------------------------------------------------

class RandomScalars {
 public:
  explicit RandomScalars(unsigned seed) : rng_(seed) {}

  Rational coeff() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Rational(num(rng_), den(rng_));
  }

  SparsePoly poly(int max_terms = 4, int max_deg = 3) {
    static const std::vector<std::string> names{"x", "y", "q"};
    std::uniform_int_distribution<int> nt(0, max_terms), dg(0, max_deg);
    SparsePoly p;
    const int n = nt(rng_);
    for (int t = 0; t < n; ++t) {
      SparsePoly m(coeff());
      for (const auto& v : names) m = m * SparsePoly::variable(v).pow(static_cast<unsigned>(dg(rng_) / 2));
      p = p + m;
    }
    return p;
  }

  RatFunc ratfunc() {
    SparsePoly d = poly(3, 2);
    if (d.is_zero()) d = SparsePoly(1);
    return RatFunc(poly(), d);
  }

 private:
  std::mt19937 rng_;
};

TEST(ScalarProperties, RingAxioms) {
  RandomScalars gen(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.poly(), b = gen.poly(), c = gen.poly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(ScalarProperties, ProbabilisticAgreesWithExact) {
  RandomScalars gen(12);
  int equal_pairs = 0;
  for (int i = 0; i < 100; ++i) {
    const RatFunc a = gen.ratfunc();
    // Even pairs are equal by construction but written differently.
    RatFunc c = gen.ratfunc();
    if (c.is_zero()) c = RatFunc(2);
    const RatFunc b = (i % 2 == 0) ? (a * c) / c : a + gen.ratfunc();
    const bool exact = equal_exact(a, b);
    equal_pairs += exact ? 1 : 0;
    try {
      EXPECT_EQ(equal_probabilistic(a, b, 100 + static_cast<unsigned>(i), 3), exact);
    } catch (const DegenerateSample&) {
      ADD_FAILURE() << "degenerate sample for " << a.to_string();
    }
  }
  EXPECT_GT(equal_pairs, 0);
}

TEST(ScalarProperties, LeibnizForRatFunc) {
  RandomScalars gen(13);
  for (int i = 0; i < 50; ++i) {
    const RatFunc a = gen.ratfunc(), b = gen.ratfunc();
    EXPECT_EQ(derivative(a * b, "x"), derivative(a, "x") * b + a * derivative(b, "x"));
  }
}

TEST(ScalarProperties, FieldInverse) {
  RandomScalars gen(14);
  for (int i = 0; i < 50; ++i) {
    const RatFunc a = gen.ratfunc(), b = gen.ratfunc();
    if (b.is_zero()) continue;
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a - b + b, a);
  }
}

}  // namespace
}  // namespace defcalc
