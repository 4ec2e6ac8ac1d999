#pragma once

#include "ltpair/matcount.hpp"
#include "ltpair/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ltpair::local {

using matcount::PrimePower;

/// How a local factor was obtained.
enum class Provenance {
  ClosedFormTheorem,         // same-trace formulas (proven)
  ClosedFormProposition,     // ell | t1 t2 and the 2-adic table (proven)
  ClosedFormConjecture,      // distinct-trace formulas verified only numerically
  DirectWithStabilityCheck,  // computed from S at consecutive depths
};

std::string_view provenance_name(Provenance p);

/// The normalized local sums S_k = S(t1, t2; ell^k) / ell^{5k-5} for k = 1..K.
struct LocalSequence {
  struct Entry {
    unsigned k;
    BigInt S;
    Rational normalized;
  };
  std::uint64_t ell;
  std::int64_t t1, t2;
  std::vector<Entry> entries;
};

/// lim_k S_k and the derived Euler factor c_ell = limit / ((ell-1)^3 (ell+1)^2).
struct LocalFactor {
  std::uint64_t ell;
  Rational limit;
  std::optional<unsigned> stabilized_at;
  Rational c_ell;
  Provenance provenance;
  std::string rule;

  friend bool operator==(const LocalFactor&, const LocalFactor&) = default;
};

/// The direct fallback found different values at consecutive depths.
class Unstable : public Error {
 public:
  Unstable(std::uint64_t ell, unsigned k1, Rational v1, unsigned k2, Rational v2);
  std::uint64_t ell;
  unsigned k1, k2;
  Rational value1, value2;
};

struct DirectOptions {
  /// Refuse when phi(ell^k) exceeds this.
  std::uint64_t unit_cap = 100'000'000;
  unsigned workers = 1;
};

/// S(t1, t2; ell^k) = sum over units u of m(t1, u) m(t2, u), exactly.
/// Partial sums are combined in ascending unit order whatever the worker count.
BigInt s_direct(std::int64_t t1, std::int64_t t2, const PrimePower& pp, const DirectOptions& opts = {});

/// s_direct / ell^{5k-5}.
Rational s_normalized(std::int64_t t1, std::int64_t t2, const PrimePower& pp, const DirectOptions& opts = {});

LocalSequence local_sequence(std::int64_t t1, std::int64_t t2, std::uint64_t ell, unsigned k_max,
                             const DirectOptions& opts = {});

/// S_k for t1 = t2 = t from the five-case same-trace formula.  Throws
/// InvalidArgument when k is outside the formula's validity (k >= 3 for
/// ell = 2 with t even).
Rational s_closed_same(std::int64_t t, std::uint64_t ell, unsigned k);

/// Printed alternatives kept for comparison against the direct sums.
enum class OddSingleDivisorReading {
  Proposition,   // ell^2 (ell^3 - ell^2 - ell - 1)
  LemmaPrinted,  // ell^2 (ell^2 - 1)(ell - 1)
};
enum class TwoAdicFourReading {
  Adjudicated,       // 35/2 iff t1 = t2 mod 8 (equivalently t1^2 = t2^2 mod 32)
  PropositionPrinted,// 35/2 iff t1^2 = t2^2 mod 16
  LemmaPrinted,      // 35/2 iff t1 = t2 mod 16
};
struct Readings {
  OddSingleDivisorReading odd_single = OddSingleDivisorReading::Proposition;
  TwoAdicFourReading two_four = TwoAdicFourReading::Adjudicated;
};

/// A closed-form value of S_k for t1 != +-t2, valid for every k >= valid_from.
struct ClosedValue {
  Rational value;
  Provenance provenance;  // Proposition or Conjecture
  unsigned valid_from;
  std::string rule;
};

/// The closed-form limit rule for t1 != +-t2 at ell, if one is known.
std::optional<ClosedValue> closed_distinct_rule(std::int64_t t1, std::int64_t t2, std::uint64_t ell,
                                                const Readings& readings = {});

/// S_k for t1 != +-t2 when a closed form covers (t1, t2, ell, k); nullopt otherwise.
/// Throws InvalidArgument when t1 = +-t2.
std::optional<ClosedValue> s_closed_distinct(std::int64_t t1, std::int64_t t2, std::uint64_t ell, unsigned k,
                                             const Readings& readings = {});

struct LimitOptions {
  bool allow_conjectural = true;
  bool allow_closed_forms = true;
  /// Cap on the first fallback depth alpha + 1.
  unsigned k_max = 6;
  /// Also compare a third depth in the fallback.
  bool third_depth = false;
  DirectOptions direct;
};

/// lim_k S_k with provenance.  Throws Unstable if the direct fallback disagrees
/// at consecutive depths.
LocalFactor local_limit(std::int64_t t1, std::int64_t t2, std::uint64_t ell, const LimitOptions& opts = {});

/// |Delta(Z/ell^k)| = phi(ell^k) (ell^{3k-2}(ell^2-1))^2.
BigInt delta_group_size(const PrimePower& pp);

/// lim_k S(t1, t2; ell^k) / ell^{5k}.
Rational volume(std::int64_t t1, std::int64_t t2, std::uint64_t ell, const LimitOptions& opts = {});

/// (ell-1)^3 (ell+1)^2.
Rational euler_normalizer(std::uint64_t ell);

}  // namespace ltpair::local
