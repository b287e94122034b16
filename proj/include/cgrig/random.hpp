#pragma once

#include "cgrig/field.hpp"

#include <cstdint>
#include <numbers>
#include <random>

namespace cgrig {

/// The single PRNG used across the library; always passed explicitly.
using Rng = std::mt19937_64;

inline Fp random_nonzero_fp(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, Fp::modulus - 1);
    return Fp::from_residue(dist(rng));
}

inline Fp random_fp(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, Fp::modulus - 1);
    return Fp::from_residue(dist(rng));
}

inline std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return dist(rng);
}

/// Uniform in [-1, 1].
inline double random_symmetric(Rng& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return dist(rng);
}

/// Uniform angle in [0, 2 pi).
inline double random_angle(Rng& rng) {
    std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
    return dist(rng);
}

} // namespace cgrig
