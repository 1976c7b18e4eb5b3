#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace hgc {

/// Deterministic random stream (xoshiro256** seeded through splitmix64).
/// Streams are derived, not advanced, from a 64-bit master seed: every
/// consumer asks for `Rng::stream(master, label, index)` so that parallel
/// work never shares generator state and results are replayable from the
/// master seed alone.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
    }

    /// Stream keyed by (master seed, label, index).
    static Rng stream(uint64_t master, std::string_view label, uint64_t index = 0) {
        uint64_t h = 1469598103934665603ull;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        uint64_t x = master;
        uint64_t a = splitmix64(x);
        uint64_t seed = a ^ h;
        seed ^= splitmix64(index) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
        return Rng(seed);
    }

    uint64_t next_u64() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Unbiased integer in [0, bound) via rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

private:
    static uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
};

}  // namespace hgc
