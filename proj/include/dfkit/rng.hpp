#pragma once

#include <cmath>
#include <cstdint>

namespace dfkit::nn {

/// Counter-based deterministic generator. Each draw hashes (key, counter)
/// with the splitmix64 finalizer, so identical seed + identical call
/// sequence gives identical streams on every platform, and independent
/// streams can be split off without sharing state.
class Rng {
 public:
  explicit Rng(uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  /// Independent stream derived from this one; does not advance the parent.
  Rng split(uint64_t stream) const { return Rng(mix(key_ ^ mix(stream + 0x632be59bd9b4e019ull))); }

  uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  uint64_t below(uint64_t n) { return next_u64() % n; }

  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo))); }

  double normal() {
    // Box-Muller, two fresh draws per call; u clamped away from 0
    double u = uniform();
    if (u < 1e-300) u = 1e-300;
    double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
  }

  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace dfkit::nn
