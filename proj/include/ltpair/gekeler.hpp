#pragma once

#include "ltpair/class_numbers.hpp"
#include "ltpair/types.hpp"

#include <cstdint>

namespace ltpair::gekeler {

/// Largest i >= 0 with ell^{2i} | t^2 - 4p; for ell = 2 also (t^2 - 4p)/4^i = 0, 1 mod 4.
/// Throws InvalidArgument when t^2 = 4p.
unsigned delta_exponent(std::int64_t t, std::uint64_t p, std::uint64_t ell);

/// The symbol selecting the f_ell case: Legendre symbol of (t^2 - 4p)/ell^{2 delta}
/// for odd ell; for ell = 2 the residue mod 8 (1 -> +1, 5 -> -1, else 0).
int case_symbol(std::int64_t t, std::uint64_t p, std::uint64_t ell);

/// The local density f_ell(t, p), exactly.
Rational f_ell(std::int64_t t, std::uint64_t p, std::uint64_t ell);

/// f_ell(t, p) in long double, for long products.
long double f_ell_fast(std::int64_t t, std::uint64_t p, std::uint64_t ell);

/// (1/(pi sqrt p)) sqrt(1 - t^2/4p), or 0 outside the Hasse interval.
long double f_infinity(std::int64_t t, std::uint64_t p);

/// m(t, p; ell^k) / (ell^{2k-2}(ell^2 - 1)).  Throws InvalidArgument for ell = p.
Rational f_level_k(std::int64_t t, std::uint64_t p, std::uint64_t ell, unsigned k);

struct ProductCheck {
  Rational lhs;        // H(t^2 - 4p)
  long double rhs;     // p f_inf prod_{l <= lmax} f_l
  long double rel_error;
  std::uint64_t lmax;
};

/// Both sides of the class-number product formula, truncated at lmax.
/// Requires t^2 < 4p and p > 3.
ProductCheck product_check(std::int64_t t, std::uint64_t p, std::uint64_t lmax,
                           classnum::ClassNumberCache* cache = nullptr);

}  // namespace ltpair::gekeler
