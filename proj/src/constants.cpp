#include "ltpair/constants.hpp"

#include "ltpair/arith.hpp"
#include "ltpair/parallel.hpp"

#include <cmath>
#include <cstdlib>

namespace ltpair::constants {

namespace {

// Factors for ell <= lmax, multiplied in ascending ell.
template <class FactorFn>
EulerProductEstimate product(std::uint64_t lmax, const ProductOptions& opts, const HighFloat& prefactor,
                             bool slow_decay, FactorFn factor) {
  if (lmax < 2) throw InvalidArgument("Euler product: lmax must be >= 2");
  const auto primes = arith::sieve_primes(lmax);
  auto factors = parallel_map<std::pair<Rational, std::string>>(
      primes.size(), opts.workers, [&](std::size_t i) { return factor(primes[i]); });

  EulerProductEstimate est;
  est.digits = opts.digits;
  est.truncation_prime = primes.back();
  HighFloat v = prefactor;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    v *= to_float(factors[i].first, opts.digits);
    if (opts.trace) est.factor_trace.push_back({primes[i], factors[i].first, factors[i].second});
  }
  est.value = v;
  auto [cons, emp] = tail_bounds(est.truncation_prime, static_cast<double>(v), slow_decay);
  est.tail_conservative = cons;
  est.tail_empirical = emp;
  return est;
}

HighFloat inverse_pi_squared(unsigned digits) {
  HighFloat pi = pi_constant(digits);
  return HighFloat(1) / (pi * pi);
}

Rational universal_factor(std::uint64_t ell) {
  const Rational L(ell);
  return (L * L * L * L - 2 * L * L - 3 * L - 1) / ((L * L - 1) * (L * L - 1));
}

}  // namespace

std::pair<double, double> tail_bounds(std::uint64_t lmax, double value, bool slow_decay) {
  const double L = static_cast<double>(lmax);
  // sum_{l > L} 8 l^{-3/2} <= 16 / sqrt(L); empirical: sum 4/l^3 <= 2/L^2, or sum 4/l^2 <= 4/L.
  const double log_cons = 16.0 / std::sqrt(L);
  const double log_emp = slow_decay ? 4.0 / L : 2.0 / (L * L);
  const double a = std::fabs(value);
  return {a * std::expm1(log_cons), a * std::expm1(log_emp)};
}

EulerProductEstimate pair_constant(std::int64_t t1, std::int64_t t2, std::uint64_t lmax, const ProductOptions& opts) {
  const bool slow = t1 == 0 || t2 == 0 || std::llabs(t1) == std::llabs(t2);
  return product(lmax, opts, inverse_pi_squared(opts.digits), slow, [&](std::uint64_t ell) {
    auto f = local::local_limit(t1, t2, ell, opts.limit);
    return std::make_pair(f.c_ell, std::string(local::provenance_name(f.provenance)));
  });
}

Rational same_trace_two_factor(std::int64_t t) {
  if (t & 1) return Rational(4, 9);
  if (t % 4 == 0) return Rational(35, 18);
  return Rational(103, 54);
}

EulerProductEstimate same_trace_constant(std::int64_t t, std::uint64_t lmax, const ProductOptions& opts) {
  return product(lmax, opts, inverse_pi_squared(opts.digits), true, [&](std::uint64_t ell) {
    if (ell == 2) return std::make_pair(same_trace_two_factor(t), std::string("two-adic"));
    const Rational L(ell);
    const Rational q = L * L - 1;
    if (t % static_cast<std::int64_t>(ell) == 0)
      return std::make_pair(L * L * (L * L + 1) / (q * q), std::string("ell|t"));
    return std::make_pair(L * L * (L * L * L * L - 2 * L * L - 3 * L - 1) / (q * q * q), std::string("ell!|t"));
  });
}

EulerProductEstimate universal_product(std::uint64_t lmax, const ProductOptions& opts) {
  return product(lmax, opts, HighFloat(1), false,
                 [](std::uint64_t ell) { return std::make_pair(universal_factor(ell), std::string("universal")); });
}

EulerProductEstimate single_curve_constant(std::int64_t t, std::uint64_t lmax, const ProductOptions& opts) {
  HighFloat pre = 2 / pi_constant(opts.digits);
  return product(lmax, opts, pre, true, [&](std::uint64_t ell) {
    const Rational L(ell);
    if (t % static_cast<std::int64_t>(ell) == 0) return std::make_pair(L * L / (L * L - 1), std::string("ell|t"));
    return std::make_pair((L * L * L - L * L - L) / ((L * L - 1) * (L - 1)), std::string("ell!|t"));
  });
}

Rational q_t(std::int64_t t) {
  if (t == 0) throw InvalidArgument("q_t: t must be nonzero");
  // prod_{l > 2} l^2/(l^2 - 1) = pi^2 / 8 absorbs the 1/pi^2.
  Rational q = Rational(1, 8) * same_trace_two_factor(t) / universal_factor(2);
  for (auto [ell, e] : arith::factorize(static_cast<std::uint64_t>(std::llabs(t)))) {
    if (ell == 2) continue;
    const Rational L(ell);
    q *= (L * L + 1) * (L * L - 1) / (L * L * L * L - 2 * L * L - 3 * L - 1);
  }
  return q;
}

std::optional<Rational> known_value(std::int64_t t1, std::int64_t t2) {
  if (t1 == 0 && t2 == 0) return Rational(35, 96);
  return std::nullopt;
}

}  // namespace ltpair::constants
