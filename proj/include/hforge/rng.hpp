#pragma once

#include <cstdint>
#include <vector>

namespace hforge {

// SplitMix64. Fixed algorithm so seeded runs are reproducible across
// platforms and worker counts; not for cryptography.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // [0, bound); modulo bias is irrelevant at our bounds
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }
};

// Disjoint per-index streams derived from one seed.
inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x2545f4914f6cdd1dULL * (index + 1)));
    return SplitMix64(mixer.next());
}

// d distinct indices from [0, n), sorted ascending. Partial Fisher-Yates.
std::vector<int> sample_subset(SplitMix64& rng, int n, int d);

} // namespace hforge
