#pragma once

#include "ltpair/types.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace ltpair::matcount {

/// A prime power ell^k, k >= 1, with the modulus cached.
class PrimePower {
 public:
  /// Validates ell prime, k >= 1, and ell^k < 2^63.
  PrimePower(std::uint64_t ell, unsigned k);

  std::uint64_t ell() const { return ell_; }
  unsigned k() const { return k_; }
  std::uint64_t modulus() const { return modulus_; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint64_t ell_;
  unsigned k_;
  std::uint64_t modulus_;
};

/// The thirteen rows of the closed-form case table for m(t, u; ell^k).
enum class MatrixCase {
  OddSquareSplit,   // ell odd, n even < k, (D/ell^n | ell) = 1
  OddSquareInert,   // ell odd, n even < k, (D/ell^n | ell) = -1
  OddOddValuation,  // ell odd, n odd < k
  OddFull,          // ell odd, n = k
  TwoOddTrace,      // ell = 2, t odd
  TwoFull,          // ell = 2, t even, n = k + 2
  TwoOddValuation,  // ell = 2, t even, n odd < k + 2
  TwoKPlusOne,      // ell = 2, t even, n = k + 1 even
  TwoKResidue1,     // n = k even, r = 1 mod 4
  TwoKResidue3,     // n = k even, r = 3 mod 4
  TwoBelowResidue3, // 0 < n < k even, r = 3 mod 4
  TwoBelowResidue1, // 0 < n < k even, r = 1 mod 8
  TwoBelowResidue5, // 0 < n < k even, r = 5 mod 8
};

inline constexpr std::size_t kMatrixCaseCount = 13;

std::string_view case_name(MatrixCase c);

/// Case selection for one (t, u, ell^k): the case row plus its parameters.
struct CaseSelection {
  MatrixCase which;
  std::uint64_t n;   // truncated valuation nu_{ell,k}(t^2 - 4u)
  std::uint64_t r;   // D / ell^n reduced mod 8 (ell = 2 even-n rows only; 0 otherwise)
};

/// A matrix count m(t, u; ell^k) together with the case data that produced it.
struct MatrixCount {
  std::int64_t t;      // canonical residue mod ell^k
  std::int64_t u;      // canonical unit residue mod ell^k
  BigInt count;
  std::uint64_t n;
};

/// Selects the case row for residues t, u (u a unit).  Throws on non-unit u.
CaseSelection classify(std::int64_t t, std::int64_t u, const PrimePower& pp);

/// Evaluates a case row at (n, pp).  Every exponent in the table is an integer;
/// a half-integral exponent throws std::logic_error.
std::uint64_t evaluate_case(MatrixCase which, std::uint64_t n, const PrimePower& pp);

/// m(t, u; ell^k) from the closed-form case table.  Fast path on machine
/// integers, valid for ell^k <= 2^31 (m <= 1.5 * ell^{2k} < 2^63).
std::uint64_t m_closed_fast(std::int64_t t, std::int64_t u, const PrimePower& pp);

/// m(t, u; ell^k) from the closed-form case table.
BigInt m_closed(const BigInt& t, const BigInt& u, const PrimePower& pp);

MatrixCount m_closed_record(std::int64_t t, std::int64_t u, const PrimePower& pp);

/// N_D(m) = #{x mod 4m : x^2 = D mod 4m} / 2, by enumeration.
Rational sqrt_count_N(const BigInt& D, std::uint64_t m);

/// m(t, u; ell^k) from the square-root-count expansion, in exact rationals.
BigInt m_dks(const BigInt& t, const BigInt& u, const PrimePower& pp);

/// Default work budget for brute-force enumeration (ell^{3k} triples).
inline constexpr std::uint64_t kDefaultBruteBudget = 2'000'000;

/// m(t, u; ell^k) by enumerating every matrix.  Throws BudgetExceeded when
/// ell^{3k} > budget.
BigInt m_brute(const BigInt& t, const BigInt& u, const PrimePower& pp,
               std::uint64_t budget = kDefaultBruteBudget);

}  // namespace ltpair::matcount
