#pragma once

#include <cstdint>

namespace precis {

// Counter-based splitmix64 generator. Same seed gives the same stream on every
// platform; nearby seeds give decorrelated streams, so per-trial child seeds
// can be formed as seed ^ trial_index.
class SplitMix64 {
public:
    static constexpr const char* name() { return "splitmix64"; }

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). Modulo bias is < 2^-50 for desk-scale n.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace precis
