#pragma once

#include <cmath>
#include <cstdint>

namespace tilesim {

// Deterministic 64-bit generator used everywhere randomness is needed.
//
// Algorithm (pinned so seeds stay portable across releases):
//   state seeding  - splitmix64 of the user seed
//   stream         - xoshiro256** (Blackman & Vigna, public domain)
//   uniform double - top 53 bits scaled by 2^-53, range [0, 1)
//   normal double  - Box-Muller on two uniforms
class Prng {
public:
  explicit Prng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : state_)
      word = splitmix64(x);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, bound); modulo bias is irrelevant at the bounds we use
  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0)
      u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // Independent child stream (splitmix64 of the next output)
  Prng split() {
    uint64_t x = next_u64();
    return Prng(splitmix64(x));
  }

private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

} // namespace tilesim
