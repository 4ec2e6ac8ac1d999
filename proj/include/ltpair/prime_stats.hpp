#pragma once

#include "ltpair/class_numbers.hpp"
#include "ltpair/types.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace ltpair::prime_stats {

struct AverageResult {
  std::int64_t t1, t2;
  std::uint64_t ell;
  std::uint64_t x;
  std::uint64_t prime_count;  // pi(x)
  Rational exact;             // (1/pi(x)) sum_{p <= x, p != ell} f_ell(t1,p) f_ell(t2,p)
  double value;
  Rational reference;         // the local factor c_ell(t1, t2)
  double relative_deviation;
};

/// The prime average of f_ell(t1, p) f_ell(t2, p) and its expected limit.  Requires x >= 10.
AverageResult average_f_product(std::int64_t t1, std::int64_t t2, std::uint64_t ell, std::uint64_t x);

struct Checkpoint {
  std::uint64_t x;
  HighFloat partial_sum;
  double loglog_x;
};

struct CheckpointSeries {
  std::int64_t t1, t2;
  std::vector<Checkpoint> checkpoints;
  std::uint64_t terms = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  std::uint64_t cache_mismatches = 0;
};

inline const std::vector<std::uint64_t> kDefaultCheckpoints{1'000, 3'000, 10'000, 30'000, 100'000};

struct ClassSumOptions {
  unsigned workers = 1;
  unsigned digits = 40;
  std::optional<std::filesystem::path> cache_path;
  /// Fraction of loaded cache rows recomputed on each run.
  double spot_check_fraction = 0.01;
  /// Primes per exact-rational block.
  std::size_t block = 512;
};

/// Smallest admissible prime is the first p > max(3, t1^2/4, t2^2/4).
bool in_primed_range(std::int64_t t1, std::int64_t t2, std::uint64_t p);

/// sum over primed p <= checkpoint of H(t1^2 - 4p) H(t2^2 - 4p) / p^2, at every
/// checkpoint.  Checkpoints must be positive and strictly increasing; x is
/// appended when larger than the last checkpoint.
CheckpointSeries class_sum(std::int64_t t1, std::int64_t t2, std::uint64_t x, std::vector<std::uint64_t> checkpoints,
                           const ClassSumOptions& opts = {});

struct SlopeFit {
  double c_hat;
  double intercept;
  double residual;  // root mean square
};

/// Ordinary least squares of partial_sum against log log x.  Needs >= 3 checkpoints.
SlopeFit slope_fit(const CheckpointSeries& series);

}  // namespace ltpair::prime_stats
