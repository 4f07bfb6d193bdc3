#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace descflow {

// Stateless mixer used to derive independent stream seeds.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  uint64_t s = mix64(base ^ 0x5851f42d4c957f2dull);
  s = mix64(s ^ a);
  s = mix64(s ^ b);
  return mix64(s ^ c);
}

// mt19937_64 engine with hand-rolled distributions so that a fixed seed
// yields the same sequence on every standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // [0,1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // inclusive range
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
    uint64_t r = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * span) >> 64);
    return lo + static_cast<int>(r);
  }

  // Box-Muller, cosine branch only
  double normal() {
    double u1 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace descflow
