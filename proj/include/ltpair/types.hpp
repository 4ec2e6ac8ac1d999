#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ltpair {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Serializes an exact rational as "num/den" (den always present, den > 0).
std::string to_fraction_string(const Rational& q);

/// Parses "num/den" or "num" into a rational.
Rational parse_fraction(const std::string& s);

/// Decimal string with `digits` significant digits.
std::string to_decimal_string(const HighFloat& x, unsigned digits);

/// A HighFloat zero carrying the requested decimal precision.
HighFloat make_float(unsigned digits10);

/// Converts an exact rational at the given precision.
HighFloat to_float(const Rational& q, unsigned digits10);

/// pi at the given precision, from MPFR.
HighFloat pi_constant(unsigned digits10);

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace ltpair
