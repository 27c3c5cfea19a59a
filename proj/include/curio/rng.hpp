// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace curio {

/// splitmix64 step; advances the state and returns a mixed value.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Derives an independent stream seed from a base seed and a stream index.
/// Distinct indices map to well-separated seeds, so per-participant or
/// per-permutation streams can be created in any order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t s = base;
  std::uint64_t mixed = splitmix64(s);
  s = mixed ^ (stream * 0xD1B54A32D192ED03ull + 0x9E3779B97F4A7C15ull);
  return splitmix64(s);
}

/// Seeded random source. All draws are derived from the raw 64-bit engine
/// output with fixed arithmetic, so sequences are identical across platforms
/// and standard library implementations. Not thread safe; each simulation
/// owns its own instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Gaussian via Box-Muller; consumes exactly two engine draws per call.
  double normal(double mean, double sd);

  /// Exponential with the given mean.
  double exponential(double mean);

  bool bernoulli(double p) { return uniform01() < p; }

  /// Draws an index with probability proportional to the (non-negative)
  /// weights. At least one weight must be positive.
  std::size_t categorical(std::span<const double> weights);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Draws `count` distinct indices weighted by `weights`, via sequential draws
/// with renormalization after each removal.
std::vector<std::size_t> sample_without_replacement(std::span<const double> weights,
                                                    std::size_t count, Rng& rng);

}  // namespace curio
