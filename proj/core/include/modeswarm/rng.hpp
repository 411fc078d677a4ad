#ifndef MODESWARM_RNG_HPP
#define MODESWARM_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace modeswarm::rng {

/// SplitMix64 finalizer; used to decorrelate derived seeds.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a master seed and a label.
/// Streams for distinct labels are decorrelated, so modules drawing from
/// their own derived streams stay reproducible regardless of call order.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  std::uint64_t h = mix(master);
  for (char c : label) h = mix(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  return h;
}

/// Label plus index variant for per-trial / per-seed streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index) {
  return mix(derive_seed(master, label) ^ mix(index + 1));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace modeswarm::rng

#endif  // MODESWARM_RNG_HPP
