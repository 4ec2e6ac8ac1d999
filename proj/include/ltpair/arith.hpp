#pragma once

#include "ltpair/types.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace ltpair::arith {

/// A p-adic valuation: a natural number, or infinity for the valuation of 0.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint64_t v) : value_(v) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value; throws for infinity.
  std::uint64_t value() const;

  /// min(value, cap) with infinity mapping to cap.
  constexpr std::uint64_t capped(std::uint64_t cap) const {
    return infinite_ || value_ > cap ? cap : value_;
  }

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

Valuation max(const Valuation& a, const Valuation& b);

// ---------------------------------------------------------------------------
// Small helpers on machine integers.

/// Non-negative residue of a mod m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// base^e with overflow detection; throws InvalidArgument on overflow.
std::uint64_t ipow(std::uint64_t base, unsigned e);

BigInt ipow_big(std::uint64_t base, unsigned e);

/// Euler's totient of ell^k for prime ell.
std::uint64_t phi_prime_power(std::uint64_t ell, unsigned k);

/// Deterministic primality test for 64-bit inputs (Miller-Rabin with a fixed witness set).
bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Symbols and valuations.

/// Legendre symbol (a | ell) for an odd prime ell, via quadratic reciprocity.
/// Throws InvalidArgument for ell == 2 or ell < 3.  Primality of ell is trusted.
int legendre_symbol(std::int64_t a, std::uint64_t ell);
int legendre_symbol(const BigInt& a, std::uint64_t ell);

/// ell-adic valuation of n (infinity for n = 0).
Valuation padic_valuation(std::uint64_t ell, std::int64_t n);
Valuation padic_valuation(std::uint64_t ell, const BigInt& n);

/// Truncated valuation of D = t^2 - 4u selecting the matrix-count case:
/// min(v_ell(D), k), except for ell = 2 with t even where the cap is k + 2.
std::uint64_t nu_lk(const BigInt& t, const BigInt& u, std::uint64_t ell, unsigned k);

/// max(v_ell(t1 + t2), v_ell(t1 - t2)).
Valuation alpha(std::int64_t t1, std::int64_t t2, std::uint64_t ell);

// ---------------------------------------------------------------------------
// Primes and divisors.

struct SieveOptions {
  /// Limits above this use the segmented sieve.
  std::uint64_t segmented_threshold = 1u << 24;
  std::uint64_t segment_bytes = 1u << 18;
  /// Refuse limits above this (resource exhaustion guard).
  std::uint64_t max_limit = 100'000'000'000ULL;
};

/// All primes <= limit in increasing order.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, const SieveOptions& opts = {});

/// Sorted positive divisors of n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Sum of divisors of n >= 1.
std::uint64_t sigma(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing order; n >= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace ltpair::arith
