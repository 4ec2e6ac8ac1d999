#include "ltpair/matcount.hpp"

#include "ltpair/arith.hpp"

#include <stdexcept>

namespace ltpair::matcount {

using arith::mod_floor;

PrimePower::PrimePower(std::uint64_t ell, unsigned k) : ell_(ell), k_(k), modulus_(0) {
  if (!arith::is_prime(ell)) throw InvalidArgument("PrimePower: " + std::to_string(ell) + " is not prime");
  if (k < 1) throw InvalidArgument("PrimePower: exponent must be >= 1");
  modulus_ = arith::ipow(ell, k);
  if (modulus_ > (1ULL << 62)) throw InvalidArgument("PrimePower: modulus too large");
}

std::string_view case_name(MatrixCase c) {
  switch (c) {
    case MatrixCase::OddSquareSplit: return "odd/n-even/split";
    case MatrixCase::OddSquareInert: return "odd/n-even/inert";
    case MatrixCase::OddOddValuation: return "odd/n-odd";
    case MatrixCase::OddFull: return "odd/n=k";
    case MatrixCase::TwoOddTrace: return "two/t-odd";
    case MatrixCase::TwoFull: return "two/n=k+2";
    case MatrixCase::TwoOddValuation: return "two/n-odd";
    case MatrixCase::TwoKPlusOne: return "two/n=k+1";
    case MatrixCase::TwoKResidue1: return "two/n=k/r=1(4)";
    case MatrixCase::TwoKResidue3: return "two/n=k/r=3(4)";
    case MatrixCase::TwoBelowResidue3: return "two/n<k/r=3(4)";
    case MatrixCase::TwoBelowResidue1: return "two/n<k/r=1(8)";
    case MatrixCase::TwoBelowResidue5: return "two/n<k/r=5(8)";
  }
  return "?";
}

namespace {

using i128 = __int128;

// Valuation of a nonzero 128-bit integer, capped.
std::uint64_t capped_valuation(i128 d, std::uint64_t ell, std::uint64_t cap) {
  if (d == 0) return cap;
  if (d < 0) d = -d;
  std::uint64_t e = 0;
  while (e < cap && d % static_cast<i128>(ell) == 0) {
    d /= static_cast<i128>(ell);
    ++e;
  }
  return e;
}

// D / ell^n for D != 0 with ell^n | D, reduced mod `mod`.
std::uint64_t reduced_cofactor(i128 d, std::uint64_t ell, std::uint64_t n, std::uint64_t mod) {
  for (std::uint64_t i = 0; i < n; ++i) d /= static_cast<i128>(ell);
  i128 r = d % static_cast<i128>(mod);
  if (r < 0) r += mod;
  return static_cast<std::uint64_t>(r);
}

// Exponent given as twice its value; must be a non-negative even number.
unsigned half_exponent(long long twice) {
  if (twice < 0 || (twice & 1))
    throw std::logic_error("matrix-count table produced exponent " + std::to_string(twice) + "/2");
  return static_cast<unsigned>(twice / 2);
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) { return arith::ipow(b, e); }
BigInt pow_big(std::uint64_t b, unsigned e) { return arith::ipow_big(b, e); }

template <class Int, class Pow>
Int evaluate_impl(MatrixCase which, std::uint64_t n, std::uint64_t ell, unsigned k, Pow pw) {
  const long long K = k;
  const long long N = static_cast<long long>(n);
  const Int base = pw(ell, 2 * k) + pw(ell, 2 * k - 1);
  // 3k/2 + (1 - (-1)^k)/4 - 1, doubled.
  const long long full_twice = 3 * K + ((k & 1) ? 1 : 0) - 2;
  switch (which) {
    case MatrixCase::OddSquareSplit:
      return base;
    case MatrixCase::OddSquareInert:
      return base - 2 * pw(ell, half_exponent(4 * K - N - 2));
    case MatrixCase::OddOddValuation:
      return base - Int(ell + 1) * pw(ell, half_exponent(4 * K - N - 3));
    case MatrixCase::OddFull:
      return base - pw(ell, half_exponent(full_twice));
    case MatrixCase::TwoOddTrace:
      return pw(2, 2 * k - 1);
    case MatrixCase::TwoFull:
      return base - pw(2, half_exponent(full_twice));
    case MatrixCase::TwoOddValuation:
      return base - 3 * pw(2, half_exponent(4 * K - N - 1));
    case MatrixCase::TwoKPlusOne:
      return base - pw(2, half_exponent(3 * K - 1));
    case MatrixCase::TwoKResidue1:
      return base - pw(2, half_exponent(3 * K - 2));
    case MatrixCase::TwoKResidue3:
      return base - 3 * pw(2, half_exponent(3 * K - 2));
    case MatrixCase::TwoBelowResidue3:
      return base - 3 * pw(2, half_exponent(4 * K - N - 2));
    case MatrixCase::TwoBelowResidue1:
      return base;
    case MatrixCase::TwoBelowResidue5:
      return base - pw(2, half_exponent(4 * K - N));
  }
  throw std::logic_error("unreachable matrix case");
}

}  // namespace

CaseSelection classify(std::int64_t t, std::int64_t u, const PrimePower& pp) {
  const auto mod = static_cast<std::int64_t>(pp.modulus());
  const std::uint64_t ell = pp.ell();
  const unsigned k = pp.k();
  t = mod_floor(t, mod);
  u = mod_floor(u, mod);
  if (u % static_cast<std::int64_t>(ell) == 0)
    throw InvalidArgument("matrix count: determinant " + std::to_string(u) + " is not a unit mod " +
                          std::to_string(mod));
  const i128 d = static_cast<i128>(t) * t - 4 * static_cast<i128>(u);

  if (ell != 2) {
    std::uint64_t n = capped_valuation(d, ell, k);
    if (n == k) return {MatrixCase::OddFull, n, 0};
    if (n & 1) return {MatrixCase::OddOddValuation, n, 0};
    auto cof = reduced_cofactor(d, ell, n, ell);
    int s = arith::legendre_symbol(static_cast<std::int64_t>(cof), ell);
    if (s == 1) return {MatrixCase::OddSquareSplit, n, 0};
    if (s == -1) return {MatrixCase::OddSquareInert, n, 0};
    throw std::logic_error("matrix count: zero symbol below the valuation cap");
  }

  if (t & 1) return {MatrixCase::TwoOddTrace, 0, 0};
  std::uint64_t n = capped_valuation(d, 2, k + 2);
  if (n == k + 2) return {MatrixCase::TwoFull, n, 0};
  if (n & 1) return {MatrixCase::TwoOddValuation, n, 0};
  auto r = reduced_cofactor(d, 2, n, 8);
  if (n == k + 1) return {MatrixCase::TwoKPlusOne, n, r};
  if (n == k) {
    if (r % 4 == 1) return {MatrixCase::TwoKResidue1, n, r};
    if (r % 4 == 3) return {MatrixCase::TwoKResidue3, n, r};
  } else {
    if (r % 4 == 3) return {MatrixCase::TwoBelowResidue3, n, r};
    if (r == 1) return {MatrixCase::TwoBelowResidue1, n, r};
    if (r == 5) return {MatrixCase::TwoBelowResidue5, n, r};
  }
  throw std::logic_error("matrix count: case table miss at ell=2, t=" + std::to_string(t) +
                         ", u=" + std::to_string(u) + ", k=" + std::to_string(k));
}

std::uint64_t evaluate_case(MatrixCase which, std::uint64_t n, const PrimePower& pp) {
  if (pp.modulus() > (1ULL << 31)) throw InvalidArgument("evaluate_case: modulus exceeds fast-path range");
  return evaluate_impl<std::uint64_t>(which, n, pp.ell(), pp.k(), pow_u64);
}

std::uint64_t m_closed_fast(std::int64_t t, std::int64_t u, const PrimePower& pp) {
  CaseSelection c = classify(t, u, pp);
  return evaluate_impl<std::uint64_t>(c.which, c.n, pp.ell(), pp.k(), pow_u64);
}

BigInt m_closed(const BigInt& t, const BigInt& u, const PrimePower& pp) {
  const BigInt mod = pp.modulus();
  BigInt tr = t % mod;
  if (tr < 0) tr += mod;
  BigInt ur = u % mod;
  if (ur < 0) ur += mod;
  CaseSelection c = classify(static_cast<std::int64_t>(tr), static_cast<std::int64_t>(ur), pp);
  return evaluate_impl<BigInt>(c.which, c.n, pp.ell(), pp.k(), pow_big);
}

MatrixCount m_closed_record(std::int64_t t, std::int64_t u, const PrimePower& pp) {
  const auto mod = static_cast<std::int64_t>(pp.modulus());
  CaseSelection c = classify(t, u, pp);
  return {mod_floor(t, mod), mod_floor(u, mod), evaluate_impl<BigInt>(c.which, c.n, pp.ell(), pp.k(), pow_big),
          c.n};
}

Rational sqrt_count_N(const BigInt& D, std::uint64_t m) {
  if (m < 1) throw InvalidArgument("sqrt_count_N: m must be >= 1");
  const std::uint64_t M = 4 * m;
  BigInt dr = D % M;
  if (dr < 0) dr += M;
  const auto target = static_cast<std::uint64_t>(dr);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < M; ++x) {
    if (static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % M) == target) ++count;
  }
  return Rational(count, 2);
}

BigInt m_dks(const BigInt& t, const BigInt& u, const PrimePower& pp) {
  const std::uint64_t ell = pp.ell();
  const unsigned k = pp.k();
  if (u % ell == 0) throw InvalidArgument("m_dks: determinant is not a unit");
  const BigInt D = t * t - 4 * u;
  BigInt d4 = D % 4;
  if (d4 < 0) d4 += 4;
  if (d4 != 0 && d4 != 1) throw std::logic_error("m_dks: discriminant not 0 or 1 mod 4");

  auto v = arith::padic_valuation(ell, D);
  std::uint64_t top = v.is_infinite() ? k : std::min<std::uint64_t>(k, v.value() + 1);

  Rational prev = sqrt_count_N(D, 1);
  if (prev != 1) throw std::logic_error("m_dks: N_D(1) != 1");
  Rational sum = 1;
  std::uint64_t ellj = 1;
  for (std::uint64_t j = 1; j <= top; ++j) {
    ellj *= ell;
    Rational cur = sqrt_count_N(D, ellj);
    sum += (cur - prev) / Rational(ellj);
    prev = cur;
  }
  Rational m = sum * Rational(arith::ipow_big(ell, 2 * k));
  if (denominator_of(m) != 1 || m < 0)
    throw std::logic_error("m_dks: non-integral or negative count " + to_fraction_string(m));
  return numerator_of(m);
}

BigInt m_brute(const BigInt& t, const BigInt& u, const PrimePower& pp, std::uint64_t budget) {
  const std::uint64_t M = pp.modulus();
  if (M > 2'000'000 || M * M > budget / M)
    throw BudgetExceeded("m_brute: " + std::to_string(M) + "^3 matrices exceed budget " + std::to_string(budget));
  if (u % pp.ell() == 0) throw InvalidArgument("m_brute: determinant is not a unit");
  const auto mi = static_cast<std::int64_t>(M);
  BigInt tr = t % mi;
  if (tr < 0) tr += mi;
  BigInt ur = u % mi;
  if (ur < 0) ur += mi;
  const auto tt = static_cast<std::int64_t>(tr);
  const auto uu = static_cast<std::int64_t>(ur);
  std::uint64_t count = 0;
  for (std::int64_t a = 0; a < mi; ++a) {
    const std::int64_t d = mod_floor(tt - a, mi);
    for (std::int64_t b = 0; b < mi; ++b) {
      for (std::int64_t c = 0; c < mi; ++c) {
        if (mod_floor(a * d - b * c - uu, mi) == 0) ++count;
      }
    }
  }
  return count;
}

}  // namespace ltpair::matcount
