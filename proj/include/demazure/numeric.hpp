#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace demazure {

/// Arbitrary-precision integer used for every multiplicity and mass.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. All statistics are returned in this type.
using Rational = mpq_class;

/// Base class for the library's domain errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expectation requested on a measure whose total mass is zero.
class ZeroMass : public Error {
 public:
  ZeroMass() : Error("measure has zero total mass") {}
};

/// Support-dependent query on a measure with empty support.
class EmptyMeasure : public Error {
 public:
  EmptyMeasure() : Error("measure has empty support") {}
};

/// Recurrence requested for a parity case that does not match N.
class ParityMismatch : public Error {
 public:
  using Error::Error;
};

/// A displayed asymptotic ratio whose denominator vanishes.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

/// Builds num/den in lowest terms. Throws std::domain_error if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Checked narrowing from BigInt; throws std::overflow_error when out of range.
std::int64_t to_int64(const BigInt& value);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

std::string to_string(const BigInt& value);

/// Decimal approximation with `digits` significant digits.
std::string to_decimal(const Rational& value, int digits = 12);

/// floor(num / den) and ceil(num / den) for den > 0.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return -floor_div(-num, den);
}

}  // namespace demazure
