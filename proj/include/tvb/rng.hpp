#pragma once

#include <cstdint>

namespace tvb {

// splitmix64: the fixed 64-bit stream used everywhere randomness is needed.
// Outputs are a pure function of the state, so every seeded run replays
// bit-identically on any platform.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [lo, hi] via rejection sampling.
    int64_t uniform(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<int64_t>(next());  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<int64_t>(v % span);
    }

  private:
    uint64_t state_;
};

// One splitmix step of x; used to derive per-trial seeds from (master ^ trial).
inline uint64_t splitmix64_once(uint64_t x) {
    return SplitMix64(x).next();
}

}  // namespace tvb
