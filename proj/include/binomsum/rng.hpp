#pragma once

#include "binomsum/common.hpp"

namespace binomsum {

// SplitMix64: the named generator behind every seeded randomization in this
// project. Chosen because its output is a pure function of the 64-bit seed,
// so results are reproducible across platforms and standard library versions
// (std::uniform_real_distribution makes no such promise).
struct SplitMix64 {
    u64 state = 0;

    explicit SplitMix64(u64 seed) : state(seed) {}

    u64 next() {
        state += 0x9e3779b97f4a7c15ULL;
        u64 z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform on [-1, 1].
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

    // Uniform integer in [0, n). n >= 1.
    u64 below(u64 n) { return next() % n; }
};

// Stable per-index substream derivation: mixes a global seed with an index so
// that item i's stream does not depend on how many items precede it.
inline u64 derive_seed(u64 global_seed, u64 index) {
    SplitMix64 g(global_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return g.next();
}

}  // namespace binomsum
