#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bongard {

// Deterministic random source. std::mt19937_64 has a portable, standardized
// sequence; the distribution helpers below are hand-rolled because the
// std::uniform_* distributions are implementation-defined and would break
// reproducibility across standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
  std::uint64_t uniform_index(std::uint64_t n) {
    assert(n > 0);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool coin(double p = 0.5) { return uniform() < p; }

  template <typename T>
  const T& pick(std::span<const T> values) {
    return values[static_cast<std::size_t>(uniform_index(values.size()))];
  }

  template <typename T>
  const T& pick(const std::vector<T>& values) {
    return pick(std::span<const T>(values));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform_index(i))]);
    }
  }

  // Derives an independent child stream; used to give every problem, image
  // and pose its own deterministic sequence regardless of thread schedule.
  RandomSource derive(std::uint64_t stream) const {
    return RandomSource(mix(seed_, stream));
  }

  std::uint64_t seed() const { return seed_; }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the combined words.
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_ = 0;
};

}  // namespace bongard
