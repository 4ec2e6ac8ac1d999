#include "ltpair/local.hpp"

#include "ltpair/arith.hpp"
#include "ltpair/parallel.hpp"

#include <cstdlib>

namespace ltpair::local {

using arith::ipow_big;
using arith::mod_floor;

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ClosedFormTheorem: return "closed-form-theorem";
    case Provenance::ClosedFormProposition: return "closed-form-proposition";
    case Provenance::ClosedFormConjecture: return "closed-form-conjecture";
    case Provenance::DirectWithStabilityCheck: return "direct-with-stability-check";
  }
  return "?";
}

Unstable::Unstable(std::uint64_t ell_, unsigned k1_, Rational v1, unsigned k2_, Rational v2)
    : Error("unstable at tested depth: ell=" + std::to_string(ell_) + ", S_" + std::to_string(k1_) + "=" +
            to_fraction_string(v1) + ", S_" + std::to_string(k2_) + "=" + to_fraction_string(v2)),
      ell(ell_),
      k1(k1_),
      k2(k2_),
      value1(std::move(v1)),
      value2(std::move(v2)) {}

namespace {

using u128 = unsigned __int128;

BigInt from_u128(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  BigInt lo = static_cast<std::uint64_t>(v);
  return (hi << 64) + lo;
}

constexpr std::uint64_t kBlock = 1 << 16;
// Keeps a block's partial sum of m(t1,u) m(t2,u) <= 2^16 * (1.5 M^2)^2 below 2^128.
constexpr std::uint64_t kMaxDirectModulus = 1ULL << 27;

Rational ell_power(std::uint64_t ell, long long e) {
  if (e >= 0) return Rational(ipow_big(ell, static_cast<unsigned>(e)));
  return Rational(BigInt(1), ipow_big(ell, static_cast<unsigned>(-e)));
}

}  // namespace

BigInt s_direct(std::int64_t t1, std::int64_t t2, const PrimePower& pp, const DirectOptions& opts) {
  const std::uint64_t M = pp.modulus();
  const std::uint64_t units = arith::phi_prime_power(pp.ell(), pp.k());
  if (units > opts.unit_cap || M > kMaxDirectModulus)
    throw BudgetExceeded("s_direct: " + std::to_string(units) + " units at modulus " + std::to_string(M) +
                         " exceed the cap");
  const auto mi = static_cast<std::int64_t>(M);
  const std::int64_t r1 = mod_floor(t1, mi);
  const std::int64_t r2 = mod_floor(t2, mi);
  const bool same = r1 == r2 || r1 == mod_floor(-t2, mi);
  const std::uint64_t ell = pp.ell();

  const std::size_t blocks = (M + kBlock - 1) / kBlock;
  auto partials = parallel_map<u128>(blocks, opts.workers, [&](std::size_t b) {
    u128 acc = 0;
    const std::uint64_t lo = b * kBlock;
    const std::uint64_t hi = std::min(M, lo + kBlock);
    for (std::uint64_t u = lo; u < hi; ++u) {
      if (u % ell == 0) continue;
      const auto ui = static_cast<std::int64_t>(u);
      const std::uint64_t a = matcount::m_closed_fast(r1, ui, pp);
      const std::uint64_t c = same ? a : matcount::m_closed_fast(r2, ui, pp);
      acc += static_cast<u128>(a) * c;
    }
    return acc;
  });
  BigInt total = 0;
  for (const auto& p : partials) total += from_u128(p);
  return total;
}

Rational s_normalized(std::int64_t t1, std::int64_t t2, const PrimePower& pp, const DirectOptions& opts) {
  return Rational(s_direct(t1, t2, pp, opts)) / Rational(ipow_big(pp.ell(), 5 * pp.k() - 5));
}

LocalSequence local_sequence(std::int64_t t1, std::int64_t t2, std::uint64_t ell, unsigned k_max,
                             const DirectOptions& opts) {
  LocalSequence seq{ell, t1, t2, {}};
  for (unsigned k = 1; k <= k_max; ++k) {
    PrimePower pp(ell, k);
    BigInt s = s_direct(t1, t2, pp, opts);
    Rational norm = Rational(s) / Rational(ipow_big(ell, 5 * k - 5));
    seq.entries.push_back({k, std::move(s), std::move(norm)});
  }
  return seq;
}

namespace {

// Same-trace value; `k` = 0 requests the k -> infinity limit.
Rational same_trace_value(std::int64_t t, std::uint64_t ell, unsigned k) {
  const Rational L(ell);
  if (ell == 2) {
    if (t & 1) return 4;
    if (t % 4 == 0) return Rational(35, 2);
    Rational v(103, 6);
    if (k > 0) v -= Rational(32, 3) * ell_power(2, -2 * static_cast<long long>(k));
    return v;
  }
  if (t % static_cast<std::int64_t>(ell) == 0) return L * L * (L * L + 1) * (L - 1);
  Rational v = L * L * (L * L * L * L - 2 * L * L - 3 * L - 1) / (L + 1);
  if (k > 0) v -= L * L * L * L * ell_power(ell, -2 * static_cast<long long>(k)) / (L + 1);
  return v;
}

}  // namespace

Rational s_closed_same(std::int64_t t, std::uint64_t ell, unsigned k) {
  if (!arith::is_prime(ell)) throw InvalidArgument("s_closed_same: ell must be prime");
  if (k < 1) throw InvalidArgument("s_closed_same: k must be >= 1");
  if (ell == 2 && (t & 1) == 0 && k < 3)
    throw InvalidArgument("s_closed_same: the ell = 2, even-t formulas need k >= 3 (got k = " + std::to_string(k) +
                          ")");
  return same_trace_value(t, ell, k);
}

std::optional<ClosedValue> closed_distinct_rule(std::int64_t t1, std::int64_t t2, std::uint64_t ell,
                                                const Readings& readings) {
  if (std::llabs(t1) == std::llabs(t2)) throw InvalidArgument("closed_distinct_rule: requires t1 != +-t2");
  const Rational L(ell);
  const auto a = arith::alpha(t1, t2, ell).value();

  if (ell != 2) {
    const auto le = static_cast<std::int64_t>(ell);
    const bool div1 = t1 % le == 0;
    const bool div2 = t2 % le == 0;
    if (div1 && div2)
      return ClosedValue{L * L * (L * L + 1) * (L - 1), Provenance::ClosedFormProposition, 1, "odd/ell|gcd"};
    if (div1 || div2) {
      if (readings.odd_single == OddSingleDivisorReading::LemmaPrinted)
        return ClosedValue{L * L * (L * L - 1) * (L - 1), Provenance::ClosedFormProposition, 1,
                           "odd/ell|one (printed lemma variant)"};
      return ClosedValue{L * L * (L * L * L - L * L - L - 1), Provenance::ClosedFormProposition, 1, "odd/ell|one"};
    }
    const Rational base = L * L * (L * L * L - L * L - L - 2);
    if (a == 0)
      return ClosedValue{base - L * L * L, Provenance::ClosedFormConjecture, 1, "odd/coprime/alpha=0"};
    const Rational l2a = ell_power(ell, 2 * static_cast<long long>(a));
    return ClosedValue{base + L * L * (l2a - L * L - L - 1) / (l2a * (L + 1)), Provenance::ClosedFormConjecture,
                       static_cast<unsigned>(a + 1), "odd/coprime/alpha>=1"};
  }

  const bool odd1 = t1 & 1;
  const bool odd2 = t2 & 1;
  if (odd1 && odd2) return ClosedValue{4, Provenance::ClosedFormProposition, 1, "two/both-odd"};
  if (odd1 || odd2) return ClosedValue{8, Provenance::ClosedFormProposition, 1, "two/one-odd"};
  if (t1 % 4 == 0 && t2 % 4 == 0) {
    bool same_class = false;
    switch (readings.two_four) {
      case TwoAdicFourReading::Adjudicated:
        same_class = mod_floor(t1 - t2, 8) == 0;
        break;
      case TwoAdicFourReading::PropositionPrinted:
        same_class = mod_floor(t1 * t1 - t2 * t2, 16) == 0;
        break;
      case TwoAdicFourReading::LemmaPrinted:
        same_class = mod_floor(t1 - t2, 16) == 0;
        break;
    }
    if (same_class) return ClosedValue{Rational(35, 2), Provenance::ClosedFormProposition, 3, "two/4|gcd/same"};
    return ClosedValue{Rational(33, 2), Provenance::ClosedFormProposition, 3, "two/4|gcd/distinct"};
  }
  // 2 || gcd(t1, t2).
  if (a == 1) return ClosedValue{15, Provenance::ClosedFormConjecture, 2, "two/2||gcd/alpha=1"};
  if (a >= 3)
    return ClosedValue{Rational(103, 6) - Rational(7, 3) * ell_power(2, 3 - 2 * static_cast<long long>(a)),
                       Provenance::ClosedFormConjecture, static_cast<unsigned>(a + 1), "two/2||gcd/alpha>=3"};
  return std::nullopt;
}

std::optional<ClosedValue> s_closed_distinct(std::int64_t t1, std::int64_t t2, std::uint64_t ell, unsigned k,
                                             const Readings& readings) {
  auto rule = closed_distinct_rule(t1, t2, ell, readings);
  if (!rule || k < rule->valid_from) return std::nullopt;
  return rule;
}

Rational euler_normalizer(std::uint64_t ell) {
  const Rational L(ell);
  return (L - 1) * (L - 1) * (L - 1) * (L + 1) * (L + 1);
}

namespace {

LocalFactor make_factor(std::uint64_t ell, Rational limit, std::optional<unsigned> stab, Provenance prov,
                        std::string rule) {
  Rational c = limit / euler_normalizer(ell);
  return LocalFactor{ell, std::move(limit), stab, std::move(c), prov, std::move(rule)};
}

}  // namespace

LocalFactor local_limit(std::int64_t t1, std::int64_t t2, std::uint64_t ell, const LimitOptions& opts) {
  if (!arith::is_prime(ell)) throw InvalidArgument("local_limit: ell must be prime");
  t1 = std::llabs(t1);
  t2 = std::llabs(t2);

  if (t1 == t2) {
    const std::int64_t t = t1;
    std::optional<unsigned> stab;
    std::string rule;
    if (ell == 2) {
      if (t & 1) {
        stab = 1;
        rule = "same/two/t-odd";
      } else if (t % 4 == 0) {
        stab = 3;
        rule = "same/two/4|t";
      } else {
        rule = "same/two/2||t";
      }
    } else if (t % static_cast<std::int64_t>(ell) == 0) {
      stab = 1;
      rule = "same/odd/ell|t";
    } else {
      rule = "same/odd/ell!|t";
    }
    return make_factor(ell, same_trace_value(t, ell, 0), stab, Provenance::ClosedFormTheorem, rule);
  }

  if (opts.allow_closed_forms) {
    if (auto rule = closed_distinct_rule(t1, t2, ell)) {
      if (rule->provenance != Provenance::ClosedFormConjecture || opts.allow_conjectural)
        return make_factor(ell, rule->value, rule->valid_from, rule->provenance, rule->rule);
    }
  }

  const auto a = arith::alpha(t1, t2, ell).value();
  const unsigned k1 = static_cast<unsigned>(std::min<std::uint64_t>(a + 1, opts.k_max));
  const unsigned k2 = k1 + 1;
  Rational v1 = s_normalized(t1, t2, PrimePower(ell, k1), opts.direct);
  Rational v2 = s_normalized(t1, t2, PrimePower(ell, k2), opts.direct);
  if (v1 != v2) throw Unstable(ell, k1, v1, k2, v2);
  if (opts.third_depth) {
    Rational v3 = s_normalized(t1, t2, PrimePower(ell, k2 + 1), opts.direct);
    if (v3 != v2) throw Unstable(ell, k2, v2, k2 + 1, v3);
  }
  return make_factor(ell, v1, k1, Provenance::DirectWithStabilityCheck, "direct");
}

BigInt delta_group_size(const PrimePower& pp) {
  const std::uint64_t ell = pp.ell();
  const unsigned k = pp.k();
  BigInt per_det = ipow_big(ell, 3 * k - 2) * (BigInt(ell) * ell - 1);
  return BigInt(arith::phi_prime_power(ell, k)) * per_det * per_det;
}

Rational volume(std::int64_t t1, std::int64_t t2, std::uint64_t ell, const LimitOptions& opts) {
  return local_limit(t1, t2, ell, opts).limit / Rational(ipow_big(ell, 5));
}

}  // namespace ltpair::local
