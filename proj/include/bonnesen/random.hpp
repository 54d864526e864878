#pragma once

#include <cstdint>

#include "bonnesen/vec.hpp"

namespace bonn {

// splitmix64: tiny, platform-independent stream. All randomized machinery in
// the library draws from this so that seeds reproduce bit-for-bit anywhere.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
};

// Uniform in the d-ball by rejection from the cube; uses only arithmetic with
// exact IEEE semantics, so the stream is platform-independent.
inline Vec uniform_in_ball(int d, SplitMix64& rng) {
    for (;;) {
        Vec x(d);
        double s = 0.0;
        for (int i = 0; i < d; ++i) {
            x[i] = rng.uniform(-1.0, 1.0);
            s += x[i] * x[i];
        }
        if (s <= 1.0) return x;
    }
}

inline Vec uniform_direction(int d, SplitMix64& rng) {
    for (;;) {
        Vec x = uniform_in_ball(d, rng);
        double m = norm(x);
        if (m > 1e-3) return (1.0 / m) * x;
    }
}

}  // namespace bonn
