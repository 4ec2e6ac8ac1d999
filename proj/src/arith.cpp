#include "ltpair/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ltpair::arith {

std::uint64_t Valuation::value() const {
  if (infinite_) throw InvalidArgument("valuation is infinite");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

Valuation max(const Valuation& a, const Valuation& b) { return a < b ? b : a; }

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw InvalidArgument("ipow overflow: " + std::to_string(base) + "^" + std::to_string(e));
    r *= base;
  }
  return r;
}

BigInt ipow_big(std::uint64_t base, unsigned e) {
  BigInt r = 1;
  BigInt b = base;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t phi_prime_power(std::uint64_t ell, unsigned k) {
  if (k == 0) return 1;
  return ipow(ell, k - 1) * (ell - 1);
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Jacobi symbol (a | n) for odd n >= 1, a in [0, n).
int jacobi(std::uint64_t a, std::uint64_t n) {
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::uint64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre_symbol(std::int64_t a, std::uint64_t ell) {
  if (ell < 3 || (ell & 1) == 0)
    throw InvalidArgument("legendre_symbol: modulus must be an odd prime, got " + std::to_string(ell));
  std::uint64_t r;
  if (a >= 0) {
    r = static_cast<std::uint64_t>(a) % ell;
  } else {
    // -(a + 1) is representable for every negative int64.
    std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) + 1) % ell;
    r = neg == 0 ? 0 : ell - neg;
  }
  return jacobi(r, ell);
}

int legendre_symbol(const BigInt& a, std::uint64_t ell) {
  if (ell < 3 || (ell & 1) == 0)
    throw InvalidArgument("legendre_symbol: modulus must be an odd prime, got " + std::to_string(ell));
  BigInt r = a % ell;
  if (r < 0) r += ell;
  return jacobi(static_cast<std::uint64_t>(r), ell);
}

Valuation padic_valuation(std::uint64_t ell, std::int64_t n) {
  if (ell < 2) throw InvalidArgument("padic_valuation: ell must be prime");
  if (n == 0) return Valuation::infinity();
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  std::uint64_t e = 0;
  while (m % ell == 0) {
    m /= ell;
    ++e;
  }
  return Valuation(e);
}

Valuation padic_valuation(std::uint64_t ell, const BigInt& n) {
  if (ell < 2) throw InvalidArgument("padic_valuation: ell must be prime");
  if (n == 0) return Valuation::infinity();
  BigInt m = abs(n);
  std::uint64_t e = 0;
  if (ell == 2) return Valuation(boost::multiprecision::lsb(m));
  while (m % ell == 0) {
    m /= ell;
    ++e;
  }
  return Valuation(e);
}

std::uint64_t nu_lk(const BigInt& t, const BigInt& u, std::uint64_t ell, unsigned k) {
  BigInt d = t * t - 4 * u;
  std::uint64_t cap = (ell == 2 && (t % 2) == 0) ? k + 2 : k;
  return padic_valuation(ell, d).capped(cap);
}

Valuation alpha(std::int64_t t1, std::int64_t t2, std::uint64_t ell) {
  return max(padic_valuation(ell, BigInt(t1) + t2), padic_valuation(ell, BigInt(t1) - t2));
}

namespace {

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= limit / i)
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> segmented_sieve(std::uint64_t limit, std::uint64_t segment_size) {
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  while (root * root > limit) --root;
  std::vector<std::uint64_t> small = simple_sieve(root);

  std::vector<std::uint64_t> primes;
  primes.reserve(static_cast<std::size_t>(1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit))));
  std::vector<char> seg(segment_size);
  for (std::uint64_t low = 0; low <= limit; low += segment_size) {
    std::uint64_t high = std::min(low + segment_size - 1, limit);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t p : small) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(low, 2); n <= high; ++n)
      if (seg[n - low]) primes.push_back(n);
    if (high == limit) break;
  }
  return primes;
}

}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, const SieveOptions& opts) {
  if (limit > opts.max_limit)
    throw BudgetExceeded("sieve_primes: limit " + std::to_string(limit) + " exceeds maximum " +
                         std::to_string(opts.max_limit));
  if (limit <= opts.segmented_threshold) return simple_sieve(limit);
  return segmented_sieve(limit, std::max<std::uint64_t>(opts.segment_bytes, 1024));
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factorize: n must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("divisors: n must be positive");
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t sigma(std::uint64_t n) {
  std::uint64_t s = 0;
  for (auto d : divisors(n)) s += d;
  return s;
}

}  // namespace ltpair::arith
