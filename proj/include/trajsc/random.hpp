#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace trajsc {

// Thin wrapper over mt19937_64 that derives all variates from raw engine
// output. std::uniform_real_distribution and friends are implementation
// defined, which would break the bit-exact determinism the pipeline
// guarantees, so the mappings live here instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Log-uniform double in [lo, hi), lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection sampling over the top of the range keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// FNV-1a over a byte, folded into a running 64-bit hash.
inline std::uint64_t hash_byte(std::uint64_t h, unsigned char b) {
  return (h ^ static_cast<std::uint64_t>(b)) * 0x100000001b3ULL;
}

inline std::uint64_t hash_u64(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) h = hash_byte(h, static_cast<unsigned char>(v >> (8 * i)));
  return h;
}

inline std::uint64_t hash_str(std::uint64_t h, std::string_view s) {
  for (const char c : s) h = hash_byte(h, static_cast<unsigned char>(c));
  return h;
}

/// Derives an independent stream seed from a base seed and labels,
/// e.g. the two trajectory ids of a distance-matrix pair.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view a,
                                 std::string_view b = {}) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = hash_u64(h, base);
  h = hash_str(h, a);
  h = hash_byte(h, 0xff);  // separator so ("ab","c") != ("a","bc")
  h = hash_str(h, b);
  return h;
}

}  // namespace trajsc
