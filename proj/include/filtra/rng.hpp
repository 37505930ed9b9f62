#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace filtra {

// Deterministic RNG wrapper. std::mt19937_64 output is pinned by the
// standard; the helpers below avoid std::uniform_*_distribution, whose
// results vary across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n) without modulo bias.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  bool next_bool() { return (gen_() >> 63) != 0; }

  // Index sampled proportionally to nonnegative weights.
  std::size_t next_weighted(const std::vector<double>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    double x = next_double() * total;
    double acc = 0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (x < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace filtra
