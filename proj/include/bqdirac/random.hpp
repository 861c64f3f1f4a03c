#pragma once

#include <cstdint>
#include <string_view>

#include "bqdirac/types.hpp"

namespace bqdirac {

/// SplitMix64 finaliser.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a, used to turn a record id into a stream number.
constexpr std::uint64_t stream_id(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Counter-based generator: the n-th draw is splitmix64(key + n * golden),
/// with key derived from (seed, stream, trial). Draws never depend on which
/// thread evaluates a trial.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial = 0)
      : key_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL) ^ splitmix64(~trial))) {}

  std::uint64_t next() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++); }

  /// Uniform in [0, 1).
  Real uniform() { return static_cast<Real>(next() >> 11) * 0x1.0p-53; }
  Real uniform(Real lo, Real hi) { return lo + (hi - lo) * uniform(); }
  Complex complex(Real scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bqdirac
