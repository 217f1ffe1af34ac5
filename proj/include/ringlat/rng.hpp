#pragma once

#include <cstdint>

namespace ringlat {

// SplitMix64: 64-bit counter-based generator (Steele/Lea/Flood mixing
// constants).  The state is a plain counter, so independent substreams are
// cheap: substream(seed, i) starts its counter at seed ^ i.  All sampling in
// this project derives per-sample substreams that way, which makes parallel
// runs schedule-independent.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [1, m], unbiased (masked rejection).
    std::uint64_t next_in(std::uint64_t m) {
        std::uint64_t mask = ~0ULL;
        std::uint64_t r = m - 1;
        int bits = 0;
        while (r > 0) { ++bits; r >>= 1; }
        mask = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1);
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < m) return v + 1;
        }
    }

private:
    std::uint64_t state_;
};

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed ^ index);
}

} // namespace ringlat
