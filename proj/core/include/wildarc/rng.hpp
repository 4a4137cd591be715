#pragma once

#include <cstdint>

namespace wildarc {

/// splitmix64: tiny deterministic generator. Used for all sampling layers so
/// that a fixed seed reproduces byte-identical runs on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [a,b).
  double uniform(double a, double b) { return a + (b - a) * next_double(); }

private:
  std::uint64_t state_;
};

}  // namespace wildarc
