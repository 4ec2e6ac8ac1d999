#include "ltpair/class_numbers.hpp"

#include "ltpair/arith.hpp"

#include <cmath>
#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

namespace ltpair::classnum {

namespace {

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = arith::sieve_primes(1 << 16);
  return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Divisors of n in [lo, hi], by trial division against the small-prime table.
std::vector<std::uint64_t> divisors_between(std::uint64_t n, std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> divs{1};
  std::uint64_t m = n;
  for (std::uint64_t p : small_primes()) {
    if (p * p > m) break;
    if (m % p) continue;
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
      for (std::size_t j = 0; j < base; ++j)
        if (divs[j] * pk <= hi) divs.push_back(divs[j] * pk);
    }
  }
  if (m > 1) {
    if (m > (1ULL << 32)) throw InvalidArgument("class number: discriminant outside the trial-division range");
    const std::size_t base = divs.size();
    for (std::size_t j = 0; j < base; ++j)
      if (divs[j] * m <= hi) divs.push_back(divs[j] * m);
  }
  std::vector<std::uint64_t> out;
  for (auto d : divs)
    if (d >= lo && d <= hi) out.push_back(d);
  return out;
}

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return std::gcd(std::gcd(a, b), c); }

std::uint64_t count_reduced_forms(std::int64_t D) {
  const auto absD = static_cast<std::uint64_t>(-D);
  const std::uint64_t bmax = isqrt(absD / 3);
  std::uint64_t count = 0;
  for (std::uint64_t b = absD & 1; b <= bmax; b += 2) {
    const std::uint64_t n = (b * b + absD) / 4;
    const std::uint64_t amax = isqrt(n);
    for (std::uint64_t a : divisors_between(n, std::max<std::uint64_t>(b, 1), amax)) {
      const std::uint64_t c = n / a;
      if (gcd3(a, b, c) != 1) continue;
      count += (b == 0 || a == b || a == c) ? 1 : 2;
    }
  }
  return count;
}

}  // namespace

std::optional<std::uint64_t> ClassNumberCache::find(std::int64_t D) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(D);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void ClassNumberCache::insert(std::int64_t D, std::uint64_t h) {
  std::unique_lock lock(mu_);
  map_.emplace(D, h);
}

void ClassNumberCache::assign(std::int64_t D, std::uint64_t h) {
  std::unique_lock lock(mu_);
  map_[D] = h;
}

std::vector<std::int64_t> ClassNumberCache::keys() const {
  std::shared_lock lock(mu_);
  std::vector<std::int64_t> out;
  out.reserve(map_.size());
  for (const auto& kv : map_) out.push_back(kv.first);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ClassNumberCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

std::size_t ClassNumberCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  std::size_t loaded = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::int64_t D;
    std::uint64_t h;
    char comma;
    if (!(row >> D >> comma >> h) || comma != ',' || D >= 0 || h == 0) continue;
    insert(D, h);
    ++loaded;
  }
  return loaded;
}

void ClassNumberCache::save(const std::filesystem::path& path) const {
  std::vector<std::pair<std::int64_t, std::uint64_t>> rows;
  {
    std::shared_lock lock(mu_);
    rows.assign(map_.begin(), map_.end());
  }
  std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.first > b.first; });
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("class-number cache: cannot write " + tmp.string());
    out << "D,h\n";
    for (auto& [D, h] : rows) out << D << ',' << h << '\n';
    if (!out.flush()) throw Error("class-number cache: write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("class-number cache: rename to " + path.string() + " failed: " + ec.message());
}

void check_discriminant(std::int64_t D) {
  if (D >= 0) throw InvalidArgument("discriminant must be negative, got " + std::to_string(D));
  const auto r = arith::mod_floor(D, 4);
  if (r != 0 && r != 1) throw InvalidArgument("discriminant must be 0 or 1 mod 4, got " + std::to_string(D));
}

DiscriminantSplit split_discriminant(std::int64_t D) {
  check_discriminant(D);
  std::int64_t f = 1;
  std::int64_t D0 = D;
  for (const auto& pe : arith::factorize(static_cast<std::uint64_t>(-D))) {
    const auto pi = static_cast<std::int64_t>(pe.first);
    while (D0 % (pi * pi) == 0) {
      const std::int64_t q = D0 / (pi * pi);
      const auto r = arith::mod_floor(q, 4);
      if (r != 0 && r != 1) break;
      D0 = q;
      f *= pi;
    }
  }
  return {D, D0, f};
}

std::uint64_t class_number_h(std::int64_t D) { return class_number_h(D, nullptr); }

std::uint64_t class_number_h(std::int64_t D, ClassNumberCache* cache) {
  check_discriminant(D);
  if (cache) {
    if (auto h = cache->find(D)) {
      cache->count_hit();
      return *h;
    }
    cache->count_miss();
  }
  std::uint64_t h = count_reduced_forms(D);
  if (cache) cache->insert(D, h);
  return h;
}

int unit_count_w(std::int64_t D) {
  if (D == -3) return 6;
  if (D == -4) return 4;
  return 2;
}

ClassData hurwitz_kronecker(std::int64_t D, ClassNumberCache* cache) {
  DiscriminantSplit s = split_discriminant(D);
  ClassData out{s, class_number_h(D, cache), unit_count_w(D), 0, Rational(0)};
  for (auto fp : arith::divisors(static_cast<std::uint64_t>(s.f))) {
    const std::int64_t Dp = static_cast<std::int64_t>(fp * fp) * s.D0;
    const std::uint64_t h = Dp == D ? out.h : class_number_h(Dp, cache);
    out.hurwitz_kronecker += h;
    out.weighted += Rational(static_cast<long long>(h), unit_count_w(Dp));
  }
  return out;
}

Rational hurwitz_classical(std::int64_t N, ClassNumberCache* cache) {
  if (N < 0) throw InvalidArgument("hurwitz_classical: N must be >= 0");
  if (N == 0) return Rational(-1, 12);
  const auto r = arith::mod_floor(-N, 4);
  if (r != 0 && r != 1) return 0;
  return 2 * hurwitz_kronecker(-N, cache).weighted;
}

}  // namespace ltpair::classnum
