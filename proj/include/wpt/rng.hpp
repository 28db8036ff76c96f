#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// Deterministic randomness helpers shared by the generator, the trainers and
// the fold splitter. Everything here has a pinned, platform-independent
// stream: mt19937_64 is fully specified by the C++ standard, and the
// distributions below are implemented explicitly because the standard leaves
// std::normal_distribution / std::shuffle draw patterns unspecified.
//
// Pinned algorithms (also listed in README.md):
//   engine        mt19937_64
//   seed derivation  splitmix64(seed + GOLDEN * (index + 1))
//   uniform [0,1)    (x >> 11) * 2^-53
//   gaussian         Box-Muller, one pair per two engine draws
//   bounded integer  rejection sampling on the high range
//   shuffle          Fisher-Yates, top-down, using the bounded sampler

namespace wpt::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent engine seed for substream `index` of a master seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + kGolden * (index + 1));
}

/// Uniform double in [0, 1), 53-bit mantissa method.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1]; safe as a log() argument.
inline double uniform01_positive(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;
}

/// Standard-normal pair via Box-Muller; consumes exactly two engine draws.
inline std::pair<double, double> normal_pair(std::mt19937_64& eng) {
  const double u1 = uniform01_positive(eng);
  const double u2 = uniform01(eng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * 3.141592653589793238462643383279502884 * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

/// Unbiased uniform integer in [0, n), n >= 1, by rejection.
inline std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t n) {
  const std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = eng();
    if (r >= threshold) return r % n;
  }
}

/// In-place Fisher-Yates shuffle with a pinned draw pattern.
template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& eng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded(eng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace wpt::rng
