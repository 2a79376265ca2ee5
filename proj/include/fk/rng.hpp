#pragma once

#include <cstdint>

namespace fk {

// SplitMix64: 64-bit counter-hash generator; reproducible bit-for-bit from
// the seed, and cheap to split into independent streams.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }
};

// derived stream for worker `index` of a run seeded with `seed`
inline SplitMix64 split_stream(uint64_t seed, uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return SplitMix64(mixer.next_u64());
}

}  // namespace fk
