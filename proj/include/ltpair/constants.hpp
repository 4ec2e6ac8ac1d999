#pragma once

#include "ltpair/local.hpp"
#include "ltpair/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ltpair::constants {

/// One Euler factor of a truncated product.
struct FactorTrace {
  std::uint64_t ell;
  Rational factor;
  std::string provenance;
};

/// A truncated Euler product with its tail estimates.
struct EulerProductEstimate {
  HighFloat value;
  /// Largest prime included.
  std::uint64_t truncation_prime = 0;
  /// Bound on |value - limit| from the provable l^{-3/2} decay of the factors.
  double tail_conservative = 0;
  /// Realistic error bar from the observed decay of the generic factor.
  double tail_empirical = 0;
  unsigned digits = 0;
  /// Filled when ProductOptions::trace is set.
  std::vector<FactorTrace> factor_trace;
};

struct ProductOptions {
  unsigned digits = 30;
  unsigned workers = 1;
  bool trace = false;
  local::LimitOptions limit;
};

/// (1/pi^2) prod_{l <= lmax} c_l(t1, t2).
EulerProductEstimate pair_constant(std::int64_t t1, std::int64_t t2, std::uint64_t lmax,
                                   const ProductOptions& opts = {});

/// c_{t,t} evaluated factor by factor from the same-trace product formula.
EulerProductEstimate same_trace_constant(std::int64_t t, std::uint64_t lmax, const ProductOptions& opts = {});

/// prod_{l <= lmax} (l^4 - 2l^2 - 3l - 1)/(l^2 - 1)^2.
EulerProductEstimate universal_product(std::uint64_t lmax, const ProductOptions& opts = {});

/// The single-curve constant (2/pi) prod_l (...) truncated at lmax.
EulerProductEstimate single_curve_constant(std::int64_t t, std::uint64_t lmax, const ProductOptions& opts = {});

/// The rational q_t with c_{t,t} = q_t * prod_l (l^4 - 2l^2 - 3l - 1)/(l^2 - 1)^2, t != 0.
Rational q_t(std::int64_t t);

/// The 2-adic factor of c_{t,t}: 4/9, 35/18 or 103/54.
Rational same_trace_two_factor(std::int64_t t);

/// Known closed value, if any, for reporting next to an estimate.
std::optional<Rational> known_value(std::int64_t t1, std::int64_t t2);

/// Conservative and empirical tail bounds for a product truncated at lmax.
/// `slow_decay` selects the 3/l^2 decay seen when t1 t2 = 0 or t1 = +-t2.
std::pair<double, double> tail_bounds(std::uint64_t lmax, double value, bool slow_decay);

}  // namespace ltpair::constants
