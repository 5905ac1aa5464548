#pragma once

#include <cstdint>

namespace gsv {

// xoshiro256** seeded through splitmix64. Fixed algorithm so that a recorded
// seed reproduces bit-identical output on every platform; uniform integers are
// drawn by rejection, never through std distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t z = seed;
        for (auto& w : s_) {
            z += 0x9e3779b97f4a7c15ull;
            uint64_t x = z;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            w = x ^ (x >> 31);
        }
    }

    uint64_t next() {
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

    // Uniform in [0, bound) by rejection; bound >= 1.
    uint64_t below(uint64_t bound) {
        uint64_t lim = ~uint64_t{0} - (~uint64_t{0} % bound);
        for (;;) {
            uint64_t r = next();
            if (r < lim) return r % bound;
        }
    }

    // Derives an independent stream, e.g. per restart attempt.
    static uint64_t derive(uint64_t seed, uint64_t salt) {
        uint64_t x = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace gsv
