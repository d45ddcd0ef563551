#pragma once

#include <array>
#include <cstdint>

namespace hlspipe::util {

/// xoshiro256** by Blackman & Vigna. Seeded through splitmix64 so any
/// 64-bit seed yields a well-mixed state. Used wherever a suite or
/// campaign must be reproducible from a recorded seed.
class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed) {
        uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9e3779b97f4a7c15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            s = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        auto rotl = [](uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        uint64_t result = rotl(state_[1] * 5, 7) * 9;
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    uint8_t next_byte() { return uint8_t(next() >> 56); }

    /// Uniform double in [0, 1).
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::array<uint64_t, 4> state_;
};

}  // namespace hlspipe::util
