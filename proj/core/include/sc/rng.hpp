#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sc {

/// Seeded random source. Wraps the (portable) mt19937_64 bit stream but
/// implements its own float/int/normal transforms, because the standard
/// distribution objects are implementation-defined and would break
/// byte-identical reproduction of experiment CSVs across toolchains.
///
/// split() derives an independent child stream, so parallel experiment
/// runs stay reproducible without sharing state.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi], inclusive. Rejection-free is not needed
  /// here; modulo bias at 64 bits is far below any tolerance in play.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Child stream with a seed derived from this stream's seed and a
  /// per-parent counter (splitmix64 finalizer).
  Rng split() {
    std::uint64_t x = seed_ + 0x9E3779B97F4A7C15ull * (++split_count_);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return Rng(x);
  }

  std::uint64_t seed() const { return seed_; }

private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t split_count_ = 0;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace sc
