#include "detineq/instances.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "detineq/linalg.hpp"

namespace detineq {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 mix(seed ^ (index * 0xD1B54A32D192ED03ULL));
    return mix.next();
}

std::vector<double> sorted_uniform(std::size_t n, double lo, double hi, SplitMix64& rng) {
    std::vector<double> values(n);
    for (auto& v : values) v = rng.uniform(lo, hi);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

ComplexMatrix random_hermitian(std::size_t n, double lo, double hi, SplitMix64& rng) {
    const ComplexMatrix q = random_unitary(n, rng);
    const std::vector<double> spectrum = sorted_uniform(n, lo, hi, rng);
    return unitary_similarity(q, spectrum);
}

Theorem1Instance random_theorem1_instance(std::size_t n, SplitMix64& rng) {
    Theorem1Instance inst;
    inst.a = random_hermitian(n, 0.0, 10.0, rng);
    inst.b = random_hermitian(n, 0.0, 10.0, rng);
    inst.d = sorted_uniform(n, 0.0, 3.0, rng);
    return inst;
}

PrecoderProblem random_precoder_problem(std::size_t p, std::size_t m, SplitMix64& rng) {
    PrecoderProblem prob;
    prob.g = random_hermitian(p, 0.1, 10.0, rng);
    prob.h = gaussian_matrix(m, p, rng);
    prob.rv = random_hermitian(m, 0.1, 10.0, rng);
    prob.rx = random_hermitian(p, 0.1, 10.0, rng);
    prob.power = rng.uniform(1.0, 10.0);
    return prob;
}

MajorizedPair random_majorized_pair(std::size_t n, SplitMix64& rng, double zero_probability) {
    std::vector<double> b = sorted_uniform(n, 0.0, 10.0, rng);
    if (zero_probability > 0.0 && rng.uniform() < zero_probability) b[rng.uniform_int(0, n - 1)] = 0.0;
    std::sort(b.begin(), b.end(), std::greater<>());

    std::vector<double> a = b;
    if (n >= 2) {
        const std::uint64_t pinches = rng.uniform_int(0, n);
        for (std::uint64_t s = 0; s < pinches; ++s) {
            const std::size_t i = rng.uniform_int(0, n - 1);
            std::size_t j = rng.uniform_int(0, n - 2);
            if (j >= i) ++j;
            const double tau = 0.5 * rng.uniform();
            const double x = a[i];
            const double y = a[j];
            a[i] = std::pow(x, 1.0 - tau) * std::pow(y, tau);
            a[j] = std::pow(y, 1.0 - tau) * std::pow(x, tau);
        }
        std::sort(a.begin(), a.end(), std::greater<>());
    }
    return {OrderedVector(std::move(a)), OrderedVector(std::move(b))};
}

} // namespace detineq
