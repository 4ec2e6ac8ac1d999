#include "ltpair/curves.hpp"

#include "ltpair/arith.hpp"
#include "ltpair/constants.hpp"
#include "ltpair/parallel.hpp"

#include <cmath>

namespace ltpair::curves {

Curve::Curve(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  disc_ = -16 * (4 * BigInt(a) * a * a + 27 * BigInt(b) * b);
  if (disc_ == 0)
    throw InvalidArgument("curve y^2 = x^3 + " + std::to_string(a) + "x + " + std::to_string(b) + " is singular");
}

bool Curve::good_at(std::uint64_t p) const { return disc_ % p != 0; }

std::vector<std::int8_t> residue_table(std::uint64_t p) {
  std::vector<std::int8_t> t(p, -1);
  t[0] = 0;
  for (std::uint64_t y = 1; y <= p / 2; ++y) t[y * y % p] = 1;
  return t;
}

namespace {

void check_good(const Curve& e, std::uint64_t p) {
  if (p <= 3) throw InvalidArgument("trace_ap: p must be > 3");
  if (!e.good_at(p)) throw InvalidArgument("trace_ap: bad reduction at p = " + std::to_string(p));
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  return static_cast<std::uint64_t>(arith::mod_floor(v, static_cast<std::int64_t>(p)));
}

}  // namespace

std::int64_t trace_ap(const Curve& e, std::uint64_t p) { return trace_ap(e, p, residue_table(p)); }

std::int64_t trace_ap(const Curve& e, std::uint64_t p, const std::vector<std::int8_t>& table) {
  check_good(e, p);
  const std::uint64_t a = reduce(e.a(), p);
  const std::uint64_t b = reduce(e.b(), p);
  std::int64_t s = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = x * x % p;
    const std::uint64_t v = ((x2 + a) % p * x + b) % p;
    s += table[v];
  }
  return -s;
}

std::int64_t trace_by_point_count(const Curve& e, std::uint64_t p) {
  check_good(e, p);
  const std::uint64_t a = reduce(e.a(), p);
  const std::uint64_t b = reduce(e.b(), p);
  std::uint64_t points = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = ((x * x % p + a) % p * x + b) % p;
    for (std::uint64_t y = 0; y < p; ++y)
      if (y * y % p == rhs) ++points;
  }
  return static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(points);
}

namespace {

constexpr std::size_t kPrimeBlock = 256;

template <class Match>
std::vector<std::uint64_t> matching_primes(std::uint64_t x, unsigned workers, Match match) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : arith::sieve_primes(x))
    if (p >= 5) primes.push_back(p);
  const std::size_t blocks = (primes.size() + kPrimeBlock - 1) / kPrimeBlock;
  auto found = parallel_map<std::vector<std::uint64_t>>(blocks, workers, [&](std::size_t b) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = b * kPrimeBlock; i < std::min(primes.size(), (b + 1) * kPrimeBlock); ++i)
      if (match(primes[i])) out.push_back(primes[i]);
    return out;
  });
  std::vector<std::uint64_t> all;
  for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
  return all;
}

}  // namespace

PairCount pair_count(const Curve& e1, const Curve& e2, std::int64_t t1, std::int64_t t2, std::uint64_t x,
                     const PairCountOptions& opts) {
  if (x < 5) throw InvalidArgument("pair_count: x must be >= 5");
  auto hits = matching_primes(x, opts.workers, [&](std::uint64_t p) {
    if (!e1.good_at(p) || !e2.good_at(p)) return false;
    // Hasse: no point computing a trace that cannot match.
    const auto P = static_cast<std::int64_t>(p);
    if (t1 * t1 > 4 * P || t2 * t2 > 4 * P) return false;
    const auto table = residue_table(p);
    return trace_ap(e1, p, table) == t1 && trace_ap(e2, p, table) == t2;
  });
  PairCount out;
  out.count = hits.size();
  out.x = x;
  if (opts.list_primes) out.primes = std::move(hits);
  if (opts.prediction) {
    constants::ProductOptions po;
    po.digits = 20;
    po.workers = opts.workers;
    auto c = constants::pair_constant(t1, t2, opts.prediction_lmax, po);
    out.prediction = static_cast<double>(c.value) * std::log(std::log(static_cast<double>(x)));
    out.caveat = "generic-image heuristic: assumes the curve-specific factor is 1; not a rigorous prediction";
  }
  return out;
}

std::uint64_t single_count(const Curve& e, std::int64_t t, std::uint64_t x, unsigned workers) {
  if (x < 5) throw InvalidArgument("single_count: x must be >= 5");
  return matching_primes(x, workers, [&](std::uint64_t p) {
           const auto P = static_cast<std::int64_t>(p);
           return e.good_at(p) && t * t <= 4 * P && trace_ap(e, p) == t;
         }).size();
}

}  // namespace ltpair::curves
