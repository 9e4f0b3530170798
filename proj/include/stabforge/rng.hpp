#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace stabforge {

// Seeded random stream with implementation-independent bounded draws.
//
// std::mt19937_64 output is pinned by the standard, but the stdlib
// distributions are not; below() uses masked rejection so that identical
// seeds give identical draws on every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    // Derive a child stream from (master seed, experiment name, stream index).
    // Concurrent experiments get reproducible, decorrelated streams no matter
    // how work is scheduled.
    static RngStream derive(std::uint64_t master, std::string_view name, std::uint64_t index) {
        std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the name
        for (char ch : name) {
            h ^= static_cast<unsigned char>(ch);
            h *= 0x100000001b3ull;
        }
        std::uint64_t s = mix(mix(master) ^ h);
        s = mix(s ^ index);
        return RngStream(s);
    }

    std::uint64_t next() { return eng_(); }

    // Uniform draw from [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~0ull >> __builtin_clzll(n - 1 | 1);
        for (;;) {
            std::uint64_t v = eng_() & mask;
            if (v < n) return v;
        }
    }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

}  // namespace stabforge
