#include "demazure/numeric.hpp"

#include <limits>

#include <gmp.h>

namespace demazure {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const BigInt& value) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (value < lo || value > hi) {
    throw std::overflow_error("integer " + value.get_str() + " exceeds 64-bit range");
  }
  // mpz_get_si is only guaranteed for long; go through the decimal form.
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return std::stoll(value.get_str());
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_decimal(const Rational& value, int digits) {
  mpf_class f(0, 256);
  f = value;
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  if (mant.empty() || mant == "0") return "0";
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else if (static_cast<std::size_t>(exp) >= mant.size()) {
    out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(exp)) + "." +
          mant.substr(static_cast<std::size_t>(exp));
  }
  return sign + out;
}

}  // namespace demazure
