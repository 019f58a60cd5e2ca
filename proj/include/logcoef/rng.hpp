#pragma once

#include <cstdint>

namespace logcoef {

/// splitmix64 generator. Self-contained so that seeded runs produce identical
/// streams on every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in {0, ..., n-1}.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// Independent stream for sub-task i of a seeded run; trial results are
    /// then invariant under scheduling order.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t i) {
        SplitMix64 mixer(seed);
        std::uint64_t a = mixer.next_u64();
        SplitMix64 mixer2(i ^ 0xD1B54A32D192ED03ULL);
        return SplitMix64(a ^ mixer2.next_u64());
    }

private:
    std::uint64_t state_;
};

}  // namespace logcoef
