#include "ltpair/prime_stats.hpp"

#include "ltpair/arith.hpp"
#include "ltpair/gekeler.hpp"
#include "ltpair/local.hpp"
#include "ltpair/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>

namespace ltpair::prime_stats {

AverageResult average_f_product(std::int64_t t1, std::int64_t t2, std::uint64_t ell, std::uint64_t x) {
  if (x < 10) throw InvalidArgument("average_f_product: x must be >= 10");
  if (!arith::is_prime(ell)) throw InvalidArgument("average_f_product: ell must be prime");
  const auto primes = arith::sieve_primes(x);
  AverageResult r{t1, t2, ell, x, primes.size(), Rational(0), 0, Rational(0), 0};
  Rational sum = 0;
  for (std::uint64_t p : primes) {
    if (p == ell) continue;
    sum += gekeler::f_ell(t1, p, ell) * gekeler::f_ell(t2, p, ell);
  }
  r.exact = sum / Rational(static_cast<unsigned long long>(primes.size()));
  r.value = static_cast<double>(r.exact);
  r.reference = local::local_limit(t1, t2, ell).c_ell;
  const double ref = static_cast<double>(r.reference);
  r.relative_deviation = std::fabs(r.value - ref) / ref;
  return r;
}

bool in_primed_range(std::int64_t t1, std::int64_t t2, std::uint64_t p) {
  // p > t^2/4 iff 4p > t^2.
  const auto P = static_cast<std::int64_t>(p);
  return p > 3 && 4 * P > t1 * t1 && 4 * P > t2 * t2;
}

namespace {

// Recomputes a seeded sample of the loaded rows and repairs any that disagree.
std::size_t spot_check(classnum::ClassNumberCache& cache, double fraction) {
  std::mt19937_64 rng(0x5eedc1a55ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t mismatches = 0;
  for (std::int64_t D : cache.keys()) {
    if (u(rng) >= fraction) continue;
    const std::uint64_t h = classnum::class_number_h(D);
    const auto cached = cache.find(D);
    if (cached && *cached != h) {
      ++mismatches;
      std::cerr << "class-number cache: D=" << D << " cached " << *cached << ", recomputed " << h << "\n";
      cache.assign(D, h);
    }
  }
  return mismatches;
}

}  // namespace

CheckpointSeries class_sum(std::int64_t t1, std::int64_t t2, std::uint64_t x, std::vector<std::uint64_t> checkpoints,
                           const ClassSumOptions& opts) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0 || checkpoints[i] > x || (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
      throw InvalidArgument("class_sum: checkpoints must be positive, strictly increasing and <= x");
  }
  if (checkpoints.empty() || checkpoints.back() < x) checkpoints.push_back(x);

  CheckpointSeries series{t1, t2, {}, 0, 0, 0, 0};
  classnum::ClassNumberCache cache;
  if (opts.cache_path) {
    cache.load(*opts.cache_path);
    series.cache_mismatches = spot_check(cache, opts.spot_check_fraction);
  }

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : arith::sieve_primes(x))
    if (in_primed_range(t1, t2, p)) primes.push_back(p);
  series.terms = primes.size();
  if (primes.empty()) return series;

  // Blocks never straddle a checkpoint, so each checkpoint is a prefix of whole blocks.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::vector<std::size_t> block_end_at;  // index into checkpoints for each block end, or npos
  {
    std::size_t i = 0;
    std::size_t c = 0;
    while (i < primes.size()) {
      while (c < checkpoints.size() && checkpoints[c] < primes[i]) ++c;
      const std::uint64_t limit = c < checkpoints.size() ? checkpoints[c] : x;
      std::size_t j = i;
      while (j < primes.size() && j - i < opts.block && primes[j] <= limit) ++j;
      blocks.emplace_back(i, j);
      i = j;
    }
  }

  const bool same = t1 * t1 == t2 * t2;
  auto partials = parallel_map<Rational>(blocks.size(), opts.workers, [&](std::size_t b) {
    Rational acc = 0;
    for (std::size_t i = blocks[b].first; i < blocks[b].second; ++i) {
      const auto P = static_cast<std::int64_t>(primes[i]);
      const Rational h1 = classnum::hurwitz_kronecker(t1 * t1 - 4 * P, &cache).weighted;
      const Rational h2 = same ? h1 : classnum::hurwitz_kronecker(t2 * t2 - 4 * P, &cache).weighted;
      acc += h1 * h2 / Rational(BigInt(P) * P);
    }
    return acc;
  });

  HighFloat running = make_float(opts.digits);
  std::size_t b = 0;
  for (std::uint64_t cx : checkpoints) {
    while (b < blocks.size() && primes[blocks[b].first] <= cx) {
      running += to_float(partials[b], opts.digits);
      ++b;
    }
    const double lx = std::log(static_cast<double>(cx));
    series.checkpoints.push_back({cx, running, lx > 1 ? std::log(lx) : 0.0});
  }
  series.cache_hits = cache.hits();
  series.cache_misses = cache.misses();

  if (opts.cache_path) {
    try {
      cache.save(*opts.cache_path);
    } catch (const Error& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }
  return series;
}

SlopeFit slope_fit(const CheckpointSeries& series) {
  const auto& c = series.checkpoints;
  if (c.size() < 3) throw InvalidArgument("slope_fit: need at least 3 checkpoints");
  const double n = static_cast<double>(c.size());
  double sx = 0, sy = 0;
  for (const auto& pt : c) {
    sx += pt.loglog_x;
    sy += static_cast<double>(pt.partial_sum);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& pt : c) {
    const double dx = pt.loglog_x - mx;
    sxx += dx * dx;
    sxy += dx * (static_cast<double>(pt.partial_sum) - my);
  }
  if (sxx <= 0) throw InvalidArgument("slope_fit: degenerate abscissae");
  SlopeFit f;
  f.c_hat = sxy / sxx;
  f.intercept = my - f.c_hat * mx;
  double ss = 0;
  for (const auto& pt : c) {
    const double r = static_cast<double>(pt.partial_sum) - (f.intercept + f.c_hat * pt.loglog_x);
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

}  // namespace ltpair::prime_stats
