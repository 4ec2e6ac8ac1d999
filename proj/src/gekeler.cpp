#include "ltpair/gekeler.hpp"

#include "ltpair/arith.hpp"
#include "ltpair/matcount.hpp"

#include <cmath>
#include <numbers>

namespace ltpair::gekeler {

namespace {

std::int64_t disc(std::int64_t t, std::uint64_t p) {
  const std::int64_t D = t * t - 4 * static_cast<std::int64_t>(p);
  if (D == 0) throw InvalidArgument("t^2 = 4p has no delta exponent");
  return D;
}

std::int64_t strip(std::int64_t D, std::uint64_t ell, unsigned d) {
  for (unsigned i = 0; i < 2 * d; ++i) D /= static_cast<std::int64_t>(ell);
  return D;
}

}  // namespace

unsigned delta_exponent(std::int64_t t, std::uint64_t p, std::uint64_t ell) {
  std::int64_t D = disc(t, p);
  const auto l2 = static_cast<std::int64_t>(ell * ell);
  unsigned i = 0;
  unsigned best = 0;
  while (D % l2 == 0) {
    D /= l2;
    ++i;
    const auto r = arith::mod_floor(D, 4);
    if (ell > 2 || r == 0 || r == 1) best = i;
  }
  return best;
}

int case_symbol(std::int64_t t, std::uint64_t p, std::uint64_t ell) {
  const std::int64_t R = strip(disc(t, p), ell, delta_exponent(t, p, ell));
  if (ell > 2) return arith::legendre_symbol(R, ell);
  const auto r = arith::mod_floor(R, 8);
  return r == 1 ? 1 : (r == 5 ? -1 : 0);
}

Rational f_ell(std::int64_t t, std::uint64_t p, std::uint64_t ell) {
  const unsigned d = delta_exponent(t, p, ell);
  const int s = case_symbol(t, p, ell);
  const Rational L(ell);
  const Rational pre = Rational(1) / (1 - 1 / (L * L));
  if (s == 1) return pre * (1 + 1 / L);
  if (s == -1) return pre * (1 + 1 / L - Rational(2) / Rational(arith::ipow_big(ell, d + 1)));
  return pre * (1 + 1 / L - (L + 1) / Rational(arith::ipow_big(ell, d + 2)));
}

long double f_ell_fast(std::int64_t t, std::uint64_t p, std::uint64_t ell) {
  const std::int64_t D = disc(t, p);
  const long double L = static_cast<long double>(ell);
  const long double pre = 1.0L / (1.0L - 1.0L / (L * L));
  // Generic ell: no square factor and a nonzero symbol.
  if (ell > 2 && D % static_cast<std::int64_t>(ell) != 0) {
    return arith::legendre_symbol(D, ell) == 1 ? pre * (1 + 1 / L) : pre * (1 + 1 / L - 2 / L);
  }
  const unsigned d = delta_exponent(t, p, ell);
  const int s = case_symbol(t, p, ell);
  const long double ld = std::pow(L, static_cast<long double>(d));
  if (s == 1) return pre * (1 + 1 / L);
  if (s == -1) return pre * (1 + 1 / L - 2 / (ld * L));
  return pre * (1 + 1 / L - (L + 1) / (ld * L * L));
}

long double f_infinity(std::int64_t t, std::uint64_t p) {
  const long double P = static_cast<long double>(p);
  const long double T = static_cast<long double>(t);
  if (T * T >= 4 * P) return 0;
  return std::sqrt(1 - T * T / (4 * P)) / (std::numbers::pi_v<long double> * std::sqrt(P));
}

Rational f_level_k(std::int64_t t, std::uint64_t p, std::uint64_t ell, unsigned k) {
  if (ell == p) throw InvalidArgument("f_level_k: p must be a unit mod ell");
  matcount::PrimePower pp(ell, k);
  const BigInt m = matcount::m_closed(BigInt(t), BigInt(static_cast<std::int64_t>(p % pp.modulus())), pp);
  return Rational(m) / Rational(arith::ipow_big(ell, 2 * k - 2) * (BigInt(ell) * ell - 1));
}

ProductCheck product_check(std::int64_t t, std::uint64_t p, std::uint64_t lmax, classnum::ClassNumberCache* cache) {
  if (p <= 3 || !arith::is_prime(p)) throw InvalidArgument("product_check: p must be a prime > 3");
  const std::int64_t D = t * t - 4 * static_cast<std::int64_t>(p);
  if (D >= 0) throw InvalidArgument("product_check: requires t^2 < 4p");
  ProductCheck out;
  out.lhs = classnum::hurwitz_kronecker(D, cache).weighted;
  out.lmax = lmax;
  long double log_sum = 0;
  for (std::uint64_t ell : arith::sieve_primes(lmax)) log_sum += std::log(f_ell_fast(t, p, ell));
  out.rhs = static_cast<long double>(p) * f_infinity(t, p) * std::exp(log_sum);
  const long double l = static_cast<long double>(static_cast<double>(out.lhs));
  out.rel_error = std::fabs(out.rhs - l) / l;
  return out;
}

}  // namespace ltpair::gekeler
