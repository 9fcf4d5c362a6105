#pragma once

#include <cstdint>
#include <random>

namespace graphwalk {

// splitmix64; used both as a seed mixer and to seed the main engine.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic seed derivation: mix the master seed with up to three
// counters (e.g. k, function index, trial index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    s = splitmix64(s ^ c);
    return s;
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

// uniform double in [0, 1), 53 bits
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// uniform integer in [0, bound), rejection-free enough for our bounds
inline int uniform_index(Rng& rng, int bound) {
    std::uniform_int_distribution<int> dist(0, bound - 1);
    return dist(rng);
}

}  // namespace graphwalk
