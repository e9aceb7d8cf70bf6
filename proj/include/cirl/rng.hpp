#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cirl {

/// SplitMix64 finalizer. Used to derive independent child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic child seed for a path such as (master, cell, trial).
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p + 0x632BE59BD9B4E019ULL));
  return h;
}

/// Seeded random source. The uniform draws are built directly from the
/// engine bits so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t next_u64() { return engine_(); }

  std::uint64_t seed() const { return seed_; }

  /// Independent stream for a sub-task, derived from this stream's seed.
  Rng child(std::initializer_list<std::uint64_t> path) const { return Rng(derive_seed(seed_, path)); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace cirl
