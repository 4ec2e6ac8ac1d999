#include "ltpair/model_sim.hpp"

#include "ltpair/arith.hpp"
#include "ltpair/local.hpp"
#include "ltpair/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace ltpair::model_sim {

Rational class_density(std::uint64_t m, std::int64_t r1, std::int64_t r2) {
  if (m < 2) throw InvalidArgument("class_density: m must be >= 2");
  Rational d = 1;
  for (auto [ell, k] : arith::factorize(m)) {
    matcount::PrimePower pp(ell, k);
    d *= Rational(local::s_direct(r1, r2, pp)) / Rational(local::delta_group_size(pp));
  }
  return d;
}

std::vector<Rational> class_density_table(std::uint64_t m) {
  std::vector<Rational> t(m * m);
  for (std::uint64_t r1 = 0; r1 < m; ++r1)
    for (std::uint64_t r2 = 0; r2 < m; ++r2)
      t[r1 * m + r2] = class_density(m, static_cast<std::int64_t>(r1), static_cast<std::int64_t>(r2));
  return t;
}

void validate(const ModelConfig& c) {
  if (c.m < 2) throw InvalidArgument("model: m must be >= 2");
  if (c.n_max < 5) throw InvalidArgument("model: n_max must be >= 5");
  if (c.square_bins < 1) throw InvalidArgument("model: square_bins must be >= 1");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

// Uniform in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// Index i with cdf[i-1] <= u * total < cdf[i].
std::size_t pick(const std::vector<double>& cdf, double u) {
  const double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

struct PrimeDraw {
  Sample s;
  double p_target;
};

}  // namespace

SampleRun sample_run(const ModelConfig& c) {
  validate(c);
  const std::uint64_t m = c.m;
  std::vector<double> density;
  for (const auto& q : class_density_table(m)) density.push_back(static_cast<double>(q));

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : arith::sieve_primes(c.n_max))
    if (p >= 5) primes.push_back(p);

  const auto im = static_cast<std::int64_t>(m);
  auto draws = parallel_map<PrimeDraw>(primes.size(), c.workers, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    const auto P = static_cast<std::int64_t>(p);
    std::int64_t umax = static_cast<std::int64_t>(std::sqrt(4.0L * P));
    while (umax * umax >= 4 * P) --umax;
    while ((umax + 1) * (umax + 1) < 4 * P) ++umax;

    // Per class: the integers u in the open Hasse interval with u = r mod m, their weights and CDF.
    std::vector<std::vector<std::int64_t>> members(m);
    std::vector<std::vector<double>> cdf(m);
    std::vector<double> mass(m, 0.0);
    for (std::int64_t u = -umax; u <= umax; ++u) {
      const auto r = static_cast<std::size_t>(arith::mod_floor(u, im));
      const double w = std::sqrt(1.0 - static_cast<double>(u * u) / (4.0 * static_cast<double>(P)));
      mass[r] += w;
      members[r].push_back(u);
      cdf[r].push_back(mass[r]);
    }
    std::vector<double> pair_cdf(m * m);
    double acc = 0;
    for (std::size_t j = 0; j < m * m; ++j) {
      acc += mass[j / m] * mass[j % m] * density[j];
      pair_cdf[j] = acc;
    }

    std::mt19937_64 g(splitmix64(c.seed ^ splitmix64(i)));
    const std::size_t cell = pick(pair_cdf, uniform01(g));
    const std::size_t r1 = cell / m, r2 = cell % m;
    const std::int64_t u1 = members[r1][pick(cdf[r1], uniform01(g))];
    const std::int64_t u2 = members[r2][pick(cdf[r2], uniform01(g))];

    double p_target = 0;
    if (c.t1 * c.t1 < 4 * P && c.t2 * c.t2 < 4 * P) {
      const auto a1 = static_cast<std::size_t>(arith::mod_floor(c.t1, im));
      const auto a2 = static_cast<std::size_t>(arith::mod_floor(c.t2, im));
      const double w1 = std::sqrt(1.0 - static_cast<double>(c.t1 * c.t1) / (4.0 * static_cast<double>(P)));
      const double w2 = std::sqrt(1.0 - static_cast<double>(c.t2 * c.t2) / (4.0 * static_cast<double>(P)));
      p_target = density[a1 * m + a2] * w1 * w2 / acc;
    }
    return PrimeDraw{{p, u1, u2}, p_target};
  });

  SampleRun run;
  run.class_counts.assign(m * m, 0);
  run.square_counts.assign(static_cast<std::size_t>(c.square_bins) * c.square_bins, 0);
  run.samples.reserve(draws.size());
  for (const auto& d : draws) {
    run.samples.push_back(d.s);
    run.expected_hits += d.p_target;
    const auto r1 = static_cast<std::size_t>(arith::mod_floor(d.s.u1, im));
    const auto r2 = static_cast<std::size_t>(arith::mod_floor(d.s.u2, im));
    ++run.class_counts[r1 * m + r2];
    const double scale = 2.0 * std::sqrt(static_cast<double>(d.s.p));
    auto bin = [&](std::int64_t u) {
      const double x = (static_cast<double>(u) / scale + 1.0) / 2.0;
      return std::min<std::size_t>(c.square_bins - 1, static_cast<std::size_t>(x * c.square_bins));
    };
    ++run.square_counts[bin(d.s.u1) * c.square_bins + bin(d.s.u2)];
    if (d.s.u1 == c.t1 && d.s.u2 == c.t2) ++run.hits;
  }
  return run;
}

GrowthCheck growth_check(const SampleRun& run, const ModelConfig& c) {
  const double d = static_cast<double>(class_density(c.m, c.t1, c.t2));
  double recip = 0;
  for (const auto& s : run.samples) recip += 1.0 / static_cast<double>(s.p);
  const double pi = std::numbers::pi;
  GrowthCheck g;
  g.hits = run.hits;
  g.predicted = static_cast<double>(c.m * c.m) * d * recip / (pi * pi);
  g.expected = run.expected_hits;
  g.ratio = g.predicted > 0 ? static_cast<double>(g.hits) / g.predicted : 0.0;
  return g;
}

double semicircle_mass(double a, double b) {
  auto F = [](double u) { return (u * std::sqrt(1 - u * u) + std::asin(u)) / 2; };
  return 2.0 / std::numbers::pi * (F(b) - F(a));
}

double rectangle_fraction(const SampleRun& run, double a1, double b1, double a2, double b2) {
  if (run.samples.empty()) return 0;
  std::uint64_t in = 0;
  for (const auto& s : run.samples) {
    const double scale = 2.0 * std::sqrt(static_cast<double>(s.p));
    const double x = static_cast<double>(s.u1) / scale;
    const double y = static_cast<double>(s.u2) / scale;
    if (x >= a1 && x < b1 && y >= a2 && y < b2) ++in;
  }
  return static_cast<double>(in) / static_cast<double>(run.samples.size());
}

}  // namespace ltpair::model_sim
