#pragma once
#include <cmath>
#include <cstdint>
#include <random>

namespace spad {

/// Deterministic random source. All distributions are implemented on top of
/// the raw mt19937_64 output stream, so sequences are bit-identical across
/// standard libraries and platforms for a given (seed, stream) pair.
///
/// Independent streams (stream = frame index) let frame-level workers draw
/// concurrently with schedule-independent results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : eng_(mix(seed, stream)) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Uniform integer in [0, bound), rejection sampled (no modulo bias).
  std::uint64_t uniform_int(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform integer in [lo, hi] inclusive.
  long uniform_range(long lo, long hi) {
    return lo + static_cast<long>(uniform_int(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Standard normal via Box-Muller.
  double normal() {
    const double u1 = std::max(uniform01(), 0x1.0p-60);
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  /// Exact Poisson sample. Knuth multiplication below lambda = 10, Hormann's
  /// PTRS transformed rejection above (both exact, both driven only by
  /// uniform01 draws).
  long poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda < 10.0) return poisson_knuth(lambda);
    return poisson_ptrs(lambda);
  }

 private:
  std::mt19937_64 eng_;

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over (seed, stream)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  long poisson_knuth(double lambda) {
    const double limit = std::exp(-lambda);
    long k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform01();
    } while (p > limit);
    return k - 1;
  }

  long poisson_ptrs(double lambda) {
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      const double u = uniform01() - 0.5;
      const double v = uniform01();
      const double us = 0.5 - std::abs(u);
      const long k = static_cast<long>(std::floor((2.0 * a / us + b) * u + lambda + 0.43));
      if (us >= 0.07 && v <= vr) return k;
      if (k < 0 || (us < 0.013 && v > us)) continue;
      if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
          -lambda + k * loglam - std::lgamma(k + 1.0)) {
        return k;
      }
    }
  }
};

} // namespace spad
