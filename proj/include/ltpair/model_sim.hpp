#pragma once

#include "ltpair/types.hpp"

#include <cstdint>
#include <vector>

namespace ltpair::model_sim {

/// |Delta(Z/mZ)_{r1,r2}| / |Delta(Z/mZ)| for the generic image Delta.
Rational class_density(std::uint64_t m, std::int64_t r1, std::int64_t r2);

/// The full m x m table of class densities, row r1, column r2.
std::vector<Rational> class_density_table(std::uint64_t m);

struct ModelConfig {
  std::uint64_t m = 2;
  std::uint64_t n_max = 100'000;
  std::uint64_t seed = 1;
  std::int64_t t1 = 1;
  std::int64_t t2 = 1;
  /// Side of the normalized-square histogram.
  unsigned square_bins = 8;
  unsigned workers = 1;
};

/// Throws InvalidArgument unless m >= 2 and n_max >= 5.
void validate(const ModelConfig& c);

struct Sample {
  std::uint64_t p;
  std::int64_t u1, u2;
};

struct SampleRun {
  std::vector<Sample> samples;
  /// counts[r1 * m + r2].
  std::vector<std::uint64_t> class_counts;
  /// counts[i * bins + j] for u1/(2 sqrt p) in bin i, u2/(2 sqrt p) in bin j.
  std::vector<std::uint64_t> square_counts;
  std::uint64_t hits = 0;
  /// sum over sampled primes of the exact per-prime probability of (t1, t2).
  double expected_hits = 0;
};

/// One draw u_p from the model measure for every prime 5 <= p <= n_max.
/// Prime number i uses its own generator seeded from (seed, i), so any worker
/// count gives the same run.
SampleRun sample_run(const ModelConfig& config);

/// The seeded 64-bit mixer used to derive per-prime streams.
std::uint64_t splitmix64(std::uint64_t x);

struct GrowthCheck {
  std::uint64_t hits;
  double predicted;  // (1/pi^2) m^2 density sum_p 1/p
  double expected;   // exact expectation under the sampler
  double ratio;      // hits / predicted
};

GrowthCheck growth_check(const SampleRun& run, const ModelConfig& config);

/// (2/pi) int_a^b sqrt(1 - u^2) du for -1 <= a <= b <= 1.
double semicircle_mass(double a, double b);

/// Fraction of samples with (u1, u2)/(2 sqrt p) in [a1, b1) x [a2, b2).
double rectangle_fraction(const SampleRun& run, double a1, double b1, double a2, double b2);

}  // namespace ltpair::model_sim
