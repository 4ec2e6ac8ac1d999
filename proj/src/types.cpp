#include "ltpair/types.hpp"

#include <mpfr.h>

#include <sstream>

namespace ltpair {

std::string to_fraction_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Rational parse_fraction(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("not a fraction: '" + s + "'");
  }
}

HighFloat make_float(unsigned digits10) {
  HighFloat x;
  x.precision(digits10 + 5);
  x = 0;
  return x;
}

HighFloat to_float(const Rational& q, unsigned digits10) {
  HighFloat x = make_float(digits10);
  mpfr_set_q(x.backend().data(), q.backend().data(), MPFR_RNDN);
  return x;
}

HighFloat pi_constant(unsigned digits10) {
  HighFloat x = make_float(digits10);
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

std::string to_decimal_string(const HighFloat& x, unsigned digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace ltpair
