#pragma once

#include "ltpair/types.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ltpair::local {

/// p(x)/q(x) with exact rational coefficients, lowest terms, q monic.
/// Coefficients are stored in ascending degree.
struct RationalFunction {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;

  std::size_t numerator_degree() const { return numerator.empty() ? 0 : numerator.size() - 1; }
  std::size_t denominator_degree() const { return denominator.size() - 1; }

  /// Throws InvalidArgument if the denominator vanishes at x.
  Rational operator()(const Rational& x) const;

  /// Human-readable form in the variable `var`, e.g. "(l^5 - l^4)/(1)".
  std::string to_string(const std::string& var = "l") const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// The rational function of numerator and denominator degree <= max_degree
/// through every point, with minimal total degree (ties go to the smaller
/// denominator).  Needs at least 2 max_degree + 2 points at distinct
/// abscissae.  Throws InvalidArgument on bad input and Error when no
/// consistent function exists.
RationalFunction interpolate_rational(const std::vector<std::pair<Rational, Rational>>& points,
                                      std::size_t max_degree);

}  // namespace ltpair::local
