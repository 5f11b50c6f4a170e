#include "defcalc/rational.hpp"

#include "defcalc/errors.hpp"

namespace defcalc {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw InvalidArgument("malformed rational literal '" + s + "'");
  if (sgn(v.get_den()) == 0) throw DivisionByZero();
  v.canonicalize();
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero();
    return Rational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const { return value_.get_str(10); }

}  // namespace defcalc
