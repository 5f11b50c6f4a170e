#include <gtest/gtest.h>

#include <random>

#include "defcalc/deformed_calculus.hpp"
#include "defcalc/deformed_numbers.hpp"
#include "defcalc/errors.hpp"

namespace defcalc {
namespace {

const RatFunc q = RatFunc::symbol("q");
const RatFunc eta = RatFunc::symbol("eta");

UniPoly x_pow(int n) { return UniPoly::monomial(n); }

std::vector<ShiftMap> all_shifts() { return {ShiftMap::q_shift(), ShiftMap::eta_shift(), ShiftMap::q_eta_shift()}; }

UniPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  std::vector<RatFunc> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = RatFunc(Rational(num(rng), den(rng)));
  return UniPoly(std::move(c));
}

TEST(ShiftMap, RejectsIdentity) {
  EXPECT_THROW(ShiftMap(RatFunc(1), RatFunc(0)), InvalidArgument);
  EXPECT_NO_THROW(ShiftMap(RatFunc(1), RatFunc(Rational(1, 2))));
  EXPECT_NO_THROW(ShiftMap::q_eta_shift(RatFunc(1), eta));
}

TEST(DifferenceOperator, Examples) {
  EXPECT_EQ(apply_difference_operator(x_pow(2), ShiftMap::q_shift()), UniPoly({RatFunc(0), RatFunc(1) + q}));
  EXPECT_EQ(apply_difference_operator(x_pow(2), ShiftMap::q_eta_shift()), UniPoly({eta, RatFunc(1) + q}));
  EXPECT_EQ(apply_difference_operator(x_pow(2), ShiftMap::eta_shift()), UniPoly({eta, RatFunc(2)}));
  for (const auto& s : all_shifts()) {
    EXPECT_TRUE(apply_difference_operator(UniPoly({RatFunc(7)}), s).is_zero());
    EXPECT_TRUE(apply_difference_operator(UniPoly(), s).is_zero());
  }
}

TEST(DifferenceOperator, ConcreteShift) {
  // x' = 2x + 1 on x^3: ((2x+1)^3 - x^3) / (x + 1) = 7x^2 + 5x + 1
  const ShiftMap s(RatFunc(2), RatFunc(1));
  EXPECT_EQ(apply_difference_operator(x_pow(3), s), UniPoly({RatFunc(1), RatFunc(5), RatFunc(7)}));
}

TEST(DifferenceOperator, MonomialLawForQ) {
  for (int n = 1; n <= 10; ++n) {
    // (q^n - 1)/(q - 1) written as a fraction, independent of deformed_number.
    const SparsePoly qp = SparsePoly::variable("q");
    const RatFunc qn(qp.pow(static_cast<unsigned>(n)) - SparsePoly(1), qp - SparsePoly(1));
    const UniPoly d = apply_difference_operator(x_pow(n), ShiftMap::q_shift());
    EXPECT_EQ(d, UniPoly::monomial(n - 1, qn)) << n;
    EXPECT_EQ(d, UniPoly::monomial(n - 1, deformed_number(n, DeformedKind::q))) << n;
  }
}

TEST(DifferenceOperator, DegreeDrops) {
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    const UniPoly f = random_poly(rng, 6);
    if (f.degree() < 1) continue;
    EXPECT_EQ(apply_difference_operator(f, ShiftMap::q_shift()).degree(), f.degree() - 1);
  }
}

TEST(DifferenceOperator, Linearity) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (const auto& s : all_shifts()) {
    for (int i = 0; i < 30; ++i) {
      const UniPoly f = random_poly(rng, 6), g = random_poly(rng, 6);
      const RatFunc a(Rational(num(rng), den(rng))), b(Rational(num(rng), den(rng)));
      EXPECT_EQ(apply_difference_operator(a * f + b * g, s),
                a * apply_difference_operator(f, s) + b * apply_difference_operator(g, s));
    }
  }
}

TEST(Leibniz, Examples) {
  const auto r = check_leibniz(x_pow(1), x_pow(1), ShiftMap::q_eta_shift());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ((*r.witness)["derivative"], apply_difference_operator(x_pow(2), ShiftMap::q_eta_shift()).to_string());
  EXPECT_TRUE(check_leibniz(UniPoly(), UniPoly(), ShiftMap::q_shift()).passed());
  EXPECT_TRUE(check_leibniz(UniPoly({RatFunc(3), q, eta}), UniPoly({RatFunc(1)}), ShiftMap::eta_shift()).passed());
}

TEST(Leibniz, RandomPairsUnderEveryShift) {
  std::mt19937 rng(5);
  for (const auto& s : all_shifts()) {
    for (int i = 0; i < 100; ++i) {
      const UniPoly f = random_poly(rng, 6), g = random_poly(rng, 6);
      const auto r = check_leibniz(f, g, s);
      EXPECT_TRUE(r.passed()) << r.to_json().dump();
    }
  }
}

TEST(UniPoly, ComposeAndPrint) {
  const UniPoly f({RatFunc(1), RatFunc(0), RatFunc(1)});
  EXPECT_EQ(f.compose_linear(RatFunc(1), RatFunc(1)), UniPoly({RatFunc(2), RatFunc(2), RatFunc(1)}));
  EXPECT_EQ(UniPoly({eta, RatFunc(1) + q}).to_string(), "eta + (1+q)*x");
  EXPECT_EQ(UniPoly({RatFunc(0)}).degree(), -1);
}

}  // namespace
}  // namespace defcalc
