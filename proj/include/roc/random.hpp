#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace roc {

// SplitMix64; used only to expand seeds into xoshiro state.
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ by Blackman/Vigna. Each Monte Carlo chunk owns one instance,
// keyed by (master_seed, chunk_index), so results never depend on which
// worker ran the chunk.
struct Xoshiro256pp {
    std::uint64_t s[4];

    Xoshiro256pp(std::uint64_t master_seed, std::uint64_t stream) {
        SplitMix64 sm(master_seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
        for (auto& w : s) w = sm.next();
        if ((s[0] | s[1] | s[2] | s[3]) == 0) s[0] = 1;
    }

    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Uniform on (0, 1]; never returns 0, so -log is finite.
    double uniform01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }
};

// Exponential(rate) via inverse CDF.
inline double exp_sample(Xoshiro256pp& rng, double rate) {
    return -std::log(rng.uniform01()) / rate;
}

// Standard normal pairs via Box-Muller; caches the second deviate.
// Chunk-local (lives inside the kernel), so caching cannot leak across chunks.
struct NormalGen {
    double cached = 0.0;
    bool has = false;

    double operator()(Xoshiro256pp& rng) {
        if (has) {
            has = false;
            return cached;
        }
        const double r = std::sqrt(-2.0 * std::log(rng.uniform01()));
        const double t = 2.0 * std::numbers::pi * rng.uniform01();
        cached = r * std::sin(t);
        has = true;
        return r * std::cos(t);
    }
};

}  // namespace roc
