#pragma once

#include "ltpair/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ltpair::curves {

/// y^2 = x^3 + a x + b over Q.
class Curve {
 public:
  /// Throws InvalidArgument for a singular curve.
  Curve(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  /// -16 (4a^3 + 27b^2).
  const BigInt& disc() const { return disc_; }
  bool good_at(std::uint64_t p) const;

 private:
  std::int64_t a_, b_;
  BigInt disc_;
};

/// Quadratic characters mod p: table[r] = (r | p).
std::vector<std::int8_t> residue_table(std::uint64_t p);

/// a_p = -sum_x (x^3 + a x + b | p).  Rejects p <= 3 and bad reduction.
std::int64_t trace_ap(const Curve& e, std::uint64_t p);
std::int64_t trace_ap(const Curve& e, std::uint64_t p, const std::vector<std::int8_t>& table);

/// p + 1 - #E(F_p) by counting affine points pair by pair.
std::int64_t trace_by_point_count(const Curve& e, std::uint64_t p);

struct PairCountOptions {
  bool list_primes = false;
  bool prediction = false;
  /// Truncation for the prediction's Euler product.
  std::uint64_t prediction_lmax = 10'000;
  unsigned workers = 1;
};

struct PairCount {
  std::uint64_t count = 0;
  std::uint64_t x = 0;
  std::vector<std::uint64_t> primes;
  std::optional<double> prediction;
  std::string caveat;
};

/// #{5 <= p <= x : both curves good at p, a_p(E1) = t1, a_p(E2) = t2}.
PairCount pair_count(const Curve& e1, const Curve& e2, std::int64_t t1, std::int64_t t2, std::uint64_t x,
                     const PairCountOptions& opts = {});

/// #{5 <= p <= x : E good at p, a_p(E) = t}.
std::uint64_t single_count(const Curve& e, std::int64_t t, std::uint64_t x, unsigned workers = 1);

}  // namespace ltpair::curves
