#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace dicut {

using Rng = std::mt19937_64;

/// splitmix64 finalizer. Used to derive independent-looking 64-bit words from
/// structured keys (seed, stream index, layer).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives a child seed from a parent seed and a list of tags.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) noexcept {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t t : tags) h = mix64(h ^ mix64(t + 0x632be59bd9b4e019ULL));
  return h;
}

/// Maps a 64-bit word to a double uniform on [0, 1) using the top 53 bits.
constexpr double unit_double(std::uint64_t word) noexcept {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

/// Keyed Bernoulli(p) coin: a pure function of (key, p).
inline bool keyed_coin(std::uint64_t key, double p) noexcept {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return unit_double(mix64(key)) < p;
}

}  // namespace dicut
