#pragma once

#include <cstdint>

namespace tricode {

/// Counter-friendly splitmix64 generator. All simulation randomness derives
/// per-trial seeds from (master_seed, trial_index), so results never depend
/// on worker count or scheduling.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    bool bit() { return next() >> 63; }
};

inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    SplitMix64 mix(master ^ (0x2545f4914f6cdd1dull * (index + 1)));
    mix.next();
    return mix.next();
}

}  // namespace tricode
