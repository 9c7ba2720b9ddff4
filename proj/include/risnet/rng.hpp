#pragma once

#include <cstdint>
#include <random>

namespace risnet {

/// splitmix64 finalizer; used for seed derivation only.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic child seed for sweep cell (lane = swept-value index,
/// index = Monte Carlo iteration). Changing one cell's iteration count
/// never perturbs another cell's stream.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t lane,
                                std::uint64_t index) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ mix64(lane + 0xD1B54A32D192ED03ull));
    h = mix64(h ^ mix64(index + 0x2545F4914F6CDD1Dull));
    return h;
}

/// Uniform double in [0, 1) from the top 53 bits. mt19937_64 output is
/// pinned by the standard, so streams are identical across platforms
/// (std::uniform_real_distribution is not, hence the manual mapping).
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) via 128-bit multiply-shift (no modulo bias
/// worth caring about at these ranges, and bit-stable everywhere).
inline std::size_t bounded_index(std::mt19937_64& gen, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(gen()) * n) >> 64);
}

} // namespace risnet
