#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "detineq/inequality.hpp"
#include "detineq/majorization.hpp"
#include "detineq/precoder.hpp"
#include "detineq/random.hpp"

namespace detineq {

/// Independent, reproducible seed for the index-th instance of a sweep.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Values uniform in [lo, hi], sorted non-increasing.
std::vector<double> sorted_uniform(std::size_t n, double lo, double hi, SplitMix64& rng);

/// Q·diag(λ)·Qᴴ with Q Haar-like and λ uniform in [lo, hi].
ComplexMatrix random_hermitian(std::size_t n, double lo, double hi, SplitMix64& rng);

/// PSD A and B with spectra in [0, 10], d uniform in [0, 3] sorted descending.
Theorem1Instance random_theorem1_instance(std::size_t n, SplitMix64& rng);

/// G, Rv, Rx with spectra in [0.1, 10]; complex Gaussian H; P uniform in [1, 10].
PrecoderProblem random_precoder_problem(std::size_t p, std::size_t m, SplitMix64& rng);

struct MajorizedPair {
    OrderedVector a; ///< a ≺× b
    OrderedVector b;
};

/**
 * b has entries uniform in [0, 10]; a is obtained from b by up to n random
 * product-preserving pinches (x, y) → (x^{1−τ}y^τ, y^{1−τ}x^τ), τ ∈ [0, 1/2],
 * followed by a sort. Pinches only ever move a vector down the ≺× order.
 * With probability zero_probability one entry of b is set to zero first.
 */
MajorizedPair random_majorized_pair(std::size_t n, SplitMix64& rng, double zero_probability = 0.0);

} // namespace detineq
