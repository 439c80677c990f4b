#pragma once

// Lane-parallel xoshiro256++ with one independent stream per lane, plus the
// Box-Muller transform. Stream k is seeded from splitmix64 on
// (seed, trajectory index k), so a trajectory's noise sequence depends only
// on (seed, k) and never on lane width or scheduling.

#include <cstdint>

#include "optomech/simd/pack.hpp"
#include "optomech/simd/vmath.hpp"

namespace optomech::simd {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

template <class P>
struct XoshiroPack {
    using U = typename P::u64;
    U s0, s1, s2, s3;

    // Lane i gets the stream for trajectory (traj_base + i). The splitmix
    // start state is scrambled per trajectory so the 4-draw seeding windows
    // of different trajectories cannot overlap.
    static XoshiroPack seeded(std::uint64_t seed, std::uint64_t traj_base) {
        constexpr int W = P::width;
        std::uint64_t lanes[4][W];
        for (int i = 0; i < W; ++i) {
            std::uint64_t sm =
                mix64(seed ^ ((traj_base + i + 1) * 0x9E3779B97F4A7C15ull));
            for (auto& word : lanes) word[i] = splitmix64(sm);
        }
        return {U::load(lanes[0]), U::load(lanes[1]), U::load(lanes[2]), U::load(lanes[3])};
    }

    U next_u64() {
        const U result = (s0 + s3).template rotl<23>() + s0;
        const U t = s1.template shl<17>();
        s2 = s2 ^ s0;
        s3 = s3 ^ s1;
        s1 = s1 ^ s2;
        s0 = s0 ^ s3;
        s2 = s2 ^ t;
        s3 = s3.template rotl<45>();
        return result;
    }

    // Uniform in (0, 1): (v + 1/2) * 2^-52 with v the top 52 bits.
    P next_uniform() {
        const U v = next_u64().template shr<12>();
        return (P::from_u52(v) + P::broadcast(0.5)) * P::broadcast(0x1.0p-52);
    }

    // One Box-Muller pair of standard normals.
    void next_gaussian_pair(P& g0, P& g1) {
        const P u1 = next_uniform();
        const P u2 = next_uniform();
        const P r = P::sqrt(P::broadcast(-2.0) * vlog(u1));
        P s, c;
        vsincos_2pi(u2, s, c);
        g0 = r * c;
        g1 = r * s;
    }
};

}  // namespace optomech::simd
