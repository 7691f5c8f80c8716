#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace infoutil::rng {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// SplitMix64. Fully specified, so streams are bit-identical across
// platforms and independent of how work is scheduled.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        return mix64(z);
    }

    // Uniform in the open interval (0, 1); never returns 0 or 1.
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller. Consumes two uniforms per draw and
    // keeps no cache, so the draw sequence is a pure function of the seed.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

// Derives the seed of an indexed substream (e.g. one Monte Carlo path).
// Counter-based: the substream depends only on (seed, index), never on
// execution order, which is what makes parallel runs reproducible.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

}  // namespace infoutil::rng
