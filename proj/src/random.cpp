#include "detineq/random.hpp"

#include <cmath>
#include <numbers>

namespace detineq {

Complex SplitMix64::gaussian_pair() noexcept {
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

Complex SplitMix64::complex_gaussian() noexcept {
    return gaussian_pair() * std::numbers::sqrt2 * 0.5;
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = rng.complex_gaussian();
    return m;
}

} // namespace detineq
