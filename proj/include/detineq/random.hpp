#pragma once

#include <cstdint>

#include "detineq/matrix.hpp"

namespace detineq {

/**
 * SplitMix64 generator:
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   return z ^ (z >> 31)
 *
 * Doubles take the top 53 bits: (next() >> 11) * 2^-53, which lies in [0, 1).
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Integer uniform on [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
        return lo + next() % (hi - lo + 1);
    }

    /// Standard normal pair from one Box–Muller draw, packed as re/im.
    Complex gaussian_pair() noexcept;
    /// Complex normal with E|z|² = 1.
    Complex complex_gaussian() noexcept;

private:
    std::uint64_t state_;
};

/// rows × cols matrix of independent complex normals (E|z|² = 1).
ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng);

} // namespace detineq
