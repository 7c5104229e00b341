#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace loguncert {

// std::uniform_real_distribution and std::normal_distribution are
// implementation-defined; reproducibility across standard libraries needs our
// own mapping from raw engine output.

// Uniform double in [0, 1) from the top 53 bits of the engine output.
inline double canonical(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; uses two engine draws per call.
inline double standard_normal(std::mt19937_64& gen) {
    double u = canonical(gen);
    while (u <= 0.0) u = canonical(gen);  // log(0) guard, hit with prob 2^-53
    const double v = canonical(gen);
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * 3.14159265358979323846 * v);
}

// Per-worker engine seeded deterministically from a master seed.
inline std::mt19937_64 seeded_engine(std::uint64_t master, std::uint64_t index) {
    std::mt19937_64 gen(master * 0x9E3779B97F4A7C15ull + index + 1);
    gen.discard(8);  // separates nearby seeds
    return gen;
}

}  // namespace loguncert
