#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace accel {

/// Derives an independent substream seed from (base seed, stream index) with a
/// splitmix64 mix, so per-recording streams agree between serial and parallel
/// generation.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seedable random stream with explicitly specified draw algorithms.
/// std::mt19937_64 output is pinned by the standard, and the uniform/gaussian
/// mappings below are spelled out here instead of using std::*_distribution
/// (whose streams differ between standard libraries), so a seed reproduces the
/// same dataset everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller (two draws per call).
  double gaussian() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double gaussian(double sigma) { return sigma * gaussian(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace accel
