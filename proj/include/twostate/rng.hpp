#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace twostate {

/// Recorded in run metadata so results can be reproduced.
inline constexpr std::string_view kRngDescription = "mt19937_64, substreams seeded by splitmix64";

struct RngSeed {
  std::uint64_t value = 42;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of substream `stream` derived from a master seed.
inline std::uint64_t derive_seed(RngSeed seed, std::uint64_t stream) {
  return splitmix64(seed.value ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) from the top 53 bits; independent of the standard
  /// library's distribution implementations.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace twostate
