#pragma once

#include <cstdint>
#include <random>

#include "tropint/numeric.hpp"

namespace tropint {

// splitmix64, used to derive independent per-sample seeds so parallel
// harnesses reproduce the serial results
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic across platforms: mt19937_64 output reduced without
// distribution classes (their mapping is implementation defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  long uniform_int(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  // numerator in [lo*den, hi*den] over a denominator in [1, max_den]
  Rat uniform_rat(long lo, long hi, long max_den) {
    long den = uniform_int(1, max_den);
    long num = uniform_int(lo * den, hi * den);
    return make_rat(Int(num), Int(den));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tropint
