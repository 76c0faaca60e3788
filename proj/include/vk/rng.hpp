#pragma once

#include <cstdint>
#include <random>

namespace vk {

/// Name recorded in traces and run manifests for the seeded generator.
inline constexpr const char* kRngAlgorithm = "mt19937_64+rejection";

using Rng = std::mt19937_64;

/// Uniform integer in [0, n) by rejection sampling. Unlike
/// std::uniform_int_distribution the draw sequence is identical across
/// standard library implementations.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

template <typename Vec>
void shuffle(Vec& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace vk
