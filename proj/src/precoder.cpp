#include "detineq/precoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "detineq/error.hpp"
#include "detineq/random.hpp"

namespace detineq {

namespace {

void require_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
    if (m.rows() != rows || m.cols() != cols)
        throw Error(ErrorKind::DimensionMismatch, std::string(name) + " must be " + std::to_string(rows) + "x" +
                                                      std::to_string(cols) + ", got " + std::to_string(m.rows()) +
                                                      "x" + std::to_string(m.cols()));
}

void require_pd(const ComplexMatrix& m, const char* name) {
    try {
        pd_evd(m);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotPd || e.kind() == ErrorKind::NotHermitian)
            throw Error(ErrorKind::NotPd, std::string(name) + " is not Hermitian positive definite");
        throw;
    }
}

ComplexMatrix channel_gram(const PrecoderProblem& prob) {
    return (prob.h.adjoint() * matrix_inverse_pd(prob.rv) * prob.h).hermitian_part();
}

} // namespace

void PrecoderProblem::validate() const {
    const std::size_t p = g.rows();
    if (p == 0) throw Error(ErrorKind::DimensionMismatch, "G must be non-empty");
    require_shape(g, p, p, "G");
    if (h.cols() != p || h.rows() == 0)
        throw Error(ErrorKind::DimensionMismatch, "H must have " + std::to_string(p) + " columns");
    require_shape(rv, h.rows(), h.rows(), "Rv");
    require_shape(rx, p, p, "Rx");
    if (!std::isfinite(power) || power <= 0.0) throw Error(ErrorKind::InvalidArgument, "power budget must be positive");
    require_pd(g, "G");
    require_pd(rv, "Rv");
    require_pd(rx, "Rx");
}

TransformedProblem transform_problem(const PrecoderProblem& prob) {
    prob.validate();
    TransformedProblem out;
    const ComplexMatrix root = matrix_sqrt_psd(prob.rx);
    out.gbar = (root * prob.g * root).hermitian_part();
    out.t = channel_gram(prob);
    out.evd_gbar = pd_evd(out.gbar);
    out.evd_t = psd_evd(out.t);
    out.det_rx_inv = 1.0 / determinant(prob.rx).real();
    return out;
}

WaterfillResult waterfill_general(std::span<const double> gains, std::span<const double> floors, double power) {
    if (gains.size() != floors.size() || gains.empty())
        throw Error(ErrorKind::LengthMismatch, "waterfill needs gains and floors of equal, non-zero length");
    if (!std::isfinite(power) || power <= 0.0) throw Error(ErrorKind::InvalidArgument, "power budget must be positive");
    for (std::size_t k = 0; k < gains.size(); ++k)
        if (!(gains[k] >= 0.0) || !(floors[k] >= 0.0) || !std::isfinite(gains[k]) || !std::isfinite(floors[k]))
            throw Error(ErrorKind::InvalidArgument, "waterfill gains and floors must be finite and non-negative");

    const std::size_t n = gains.size();
    WaterfillResult result;
    result.allocations.assign(n, 0.0);

    std::vector<std::size_t> live;
    std::vector<double> threshold(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (gains[k] > 0.0) {
            live.push_back(k);
            threshold[k] = floors[k] / gains[k];
        }
    }

    if (live.empty()) {
        result.all_channels_zero = true;
        for (std::size_t k = 0; k < n; ++k) result.objective_log += std::log(floors[k]);
        return result;
    }

    auto poured = [&](double level) {
        double total = 0.0;
        for (std::size_t k : live) total += std::max(0.0, level - threshold[k]);
        return total;
    };

    double lo = threshold[live.front()];
    double hi = lo;
    for (std::size_t k : live) {
        lo = std::min(lo, threshold[k]);
        hi = std::max(hi, threshold[k]);
    }
    hi += power; // poured(hi) ≥ power
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (poured(mid) < power ? lo : hi) = mid;
    }
    double level = hi;

    double active_sum = 0.0;
    std::size_t active_count = 0;
    for (std::size_t k : live) {
        if (threshold[k] < level) {
            active_sum += threshold[k];
            ++active_count;
        }
    }
    const double snapped = (power + active_sum) / static_cast<double>(active_count);
    const bool consistent = std::all_of(live.begin(), live.end(), [&](std::size_t k) {
        return (threshold[k] < level) == (threshold[k] < snapped);
    });
    if (consistent) level = snapped;

    result.mu = 1.0 / level;
    for (std::size_t k : live) {
        result.allocations[k] = std::max(0.0, level - threshold[k]);
        if (result.allocations[k] > 0.0) result.active_set.push_back(k);
    }
    for (std::size_t k = 0; k < n; ++k)
        result.objective_log += std::log(result.allocations[k] * gains[k] + floors[k]);
    return result;
}

WaterfillResult waterfill(const Spectrum& lam_t, const Spectrum& lam_g, double power) {
    if (lam_t.size() != lam_g.size())
        throw Error(ErrorKind::LengthMismatch, "waterfill needs spectra of equal length");
    const std::size_t p = lam_t.size();
    std::vector<double> floors(p);
    for (std::size_t k = 0; k < p; ++k) floors[k] = lam_g[p - 1 - k];
    return waterfill_general(lam_t.values(), floors, power);
}

PrecoderSolution solve_precoder(const PrecoderProblem& prob) {
    const TransformedProblem tp = transform_problem(prob);
    const std::size_t p = prob.p();

    PrecoderSolution sol;
    sol.waterfill = waterfill(tp.evd_t.spectrum, tp.evd_gbar.spectrum, prob.power);

    std::vector<double> dc(p);
    for (std::size_t k = 0; k < p; ++k) dc[k] = std::sqrt(sol.waterfill.allocations[k]);
    sol.dc = DiagonalScaling(dc);

    const ComplexMatrix vc = tp.evd_gbar.basis * anti_identity(p);
    const ComplexMatrix cbar = tp.evd_t.basis * sol.dc.as_matrix() * vc.adjoint();
    sol.c = cbar * matrix_inv_sqrt_pd(prob.rx);

    sol.objective = evaluate_objective(sol.c, prob);
    double product = tp.det_rx_inv;
    for (std::size_t k = 0; k < p; ++k)
        product *= sol.waterfill.allocations[k] * tp.evd_t.spectrum[k] + tp.evd_gbar.spectrum[p - 1 - k];
    sol.bound = product;
    return sol;
}

double evaluate_objective(const ComplexMatrix& c, const ComplexMatrix& g, const ComplexMatrix& t) {
    if (!c.is_square() || c.rows() != g.rows() || t.rows() != c.rows() || !t.is_square())
        throw Error(ErrorKind::DimensionMismatch, "precoder must be p x p");
    const Complex det = determinant(g + c.adjoint() * t * c);
    if (std::abs(det.imag()) > 1e-9 * std::abs(det))
        throw Error(ErrorKind::NonHermitianResult, "objective determinant has imaginary part " +
                                                       std::to_string(det.imag()));
    return det.real();
}

double evaluate_objective(const ComplexMatrix& c, const PrecoderProblem& prob) {
    return evaluate_objective(c, prob.g, channel_gram(prob));
}

PowerReport check_power(const ComplexMatrix& c, const ComplexMatrix& rx, double power) {
    if (c.cols() != rx.rows() || !rx.is_square())
        throw Error(ErrorKind::DimensionMismatch, "C columns must match Rx");
    PowerReport report;
    report.used = (c * rx * c.adjoint()).trace().real();
    report.feasible = report.used <= power * (1.0 + 1e-9);
    return report;
}

OracleReport run_dominance_oracle(const PrecoderProblem& prob, const PrecoderSolution& solution, std::size_t trials,
                                  std::size_t trials_unitary, std::uint64_t seed, double slack) {
    const TransformedProblem tp = transform_problem(prob);
    const std::size_t p = prob.p();
    SplitMix64 rng(seed);

    OracleReport report;
    report.closed_form = solution.objective;
    report.trials = trials;
    report.best_random_precoder = -std::numeric_limits<double>::infinity();
    report.best_unitary_pair = -std::numeric_limits<double>::infinity();

    for (std::size_t s = 0; s < trials; ++s) {
        ComplexMatrix w = gaussian_matrix(p, p, rng);
        const double used = check_power(w, prob.rx, prob.power).used;
        w *= std::sqrt(prob.power / used);
        report.best_random_precoder = std::max(report.best_random_precoder, evaluate_objective(w, prob.g, tp.t));
    }

    const ComplexMatrix dt = ComplexMatrix::diagonal(tp.evd_t.spectrum.values());
    const ComplexMatrix dg = ComplexMatrix::diagonal(tp.evd_gbar.spectrum.values());
    for (std::size_t s = 0; s < trials_unitary; ++s) {
        const ComplexMatrix u = random_unitary(p, rng);
        const ComplexMatrix v = random_unitary(p, rng);
        const ComplexMatrix a = (u.adjoint() * dt * u).hermitian_part();
        const ComplexMatrix b = (v.adjoint() * dg * v).hermitian_part();
        std::vector<double> gains(p), floors(p);
        for (std::size_t k = 0; k < p; ++k) {
            gains[k] = std::max(0.0, a(k, k).real());
            floors[k] = std::max(0.0, b(k, k).real());
        }
        const WaterfillResult wf = waterfill_general(gains, floors, prob.power);
        ComplexMatrix scaled = a;
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j)
                scaled(i, j) *= std::sqrt(wf.allocations[i] * wf.allocations[j]);
        const double value = tp.det_rx_inv * determinant(b + scaled).real();
        report.best_unitary_pair = std::max(report.best_unitary_pair, value);
    }

    const double ceiling = report.closed_form + slack * std::abs(report.closed_form);
    report.dominates = report.best_random_precoder <= ceiling && report.best_unitary_pair <= ceiling;
    return report;
}

} // namespace detineq
