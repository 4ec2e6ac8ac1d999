#pragma once

#include "ltpair/types.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace ltpair::classnum {

/// D = f^2 D0 with D0 fundamental and f the conductor.
struct DiscriminantSplit {
  std::int64_t D;
  std::int64_t D0;
  std::int64_t f;
  friend bool operator==(const DiscriminantSplit&, const DiscriminantSplit&) = default;
};

struct ClassData {
  DiscriminantSplit split;
  std::uint64_t h;
  int w;
  /// sum over f' | f of h(f'^2 D0).
  std::uint64_t hurwitz_kronecker;
  /// sum over f' | f of h(f'^2 D0) / w(f'^2 D0).
  Rational weighted;
};

/// Memo of h(D) keyed by discriminant.  Concurrent readers, serialized writers.
/// Persisted as CSV with header "D,h".
class ClassNumberCache {
 public:
  std::optional<std::uint64_t> find(std::int64_t D) const;
  void insert(std::int64_t D, std::uint64_t h);
  /// Overwrites an existing entry.
  void assign(std::int64_t D, std::uint64_t h);
  std::vector<std::int64_t> keys() const;
  std::size_t size() const;

  /// Reads a cache file, skipping malformed rows.  Returns the number of rows
  /// loaded; a missing or unreadable file loads nothing.
  std::size_t load(const std::filesystem::path& path);

  /// Writes via a temporary file and rename.  Throws Error on I/O failure.
  void save(const std::filesystem::path& path) const;

  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  void count_hit() { ++hits_; }
  void count_miss() { ++misses_; }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::int64_t, std::uint64_t> map_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

/// Throws InvalidArgument unless D < 0 and D = 0, 1 mod 4.
void check_discriminant(std::int64_t D);

DiscriminantSplit split_discriminant(std::int64_t D);

/// Number of reduced primitive forms of discriminant D.
std::uint64_t class_number_h(std::int64_t D);
std::uint64_t class_number_h(std::int64_t D, ClassNumberCache* cache);

/// 6 for D = -3, 4 for D = -4, else 2.
int unit_count_w(std::int64_t D);

ClassData hurwitz_kronecker(std::int64_t D, ClassNumberCache* cache = nullptr);

/// The classical Hurwitz number: -1/12 at 0, 2 H(-N) for -N a discriminant, 0 otherwise.
Rational hurwitz_classical(std::int64_t N, ClassNumberCache* cache = nullptr);

}  // namespace ltpair::classnum
