#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "detineq/linalg.hpp"
#include "detineq/matrix.hpp"

namespace detineq {

/// maximise det(G + CᴴHᴴRv⁻¹HC) subject to tr(C Rx Cᴴ) ≤ P, with C p × p.
struct PrecoderProblem {
    ComplexMatrix g;  ///< p × p, positive definite
    ComplexMatrix h;  ///< m × p
    ComplexMatrix rv; ///< m × m, positive definite
    ComplexMatrix rx; ///< p × p, positive definite
    double power = 0.0;

    std::size_t p() const noexcept { return g.rows(); }
    std::size_t m() const noexcept { return h.rows(); }

    /// Throws DimensionMismatch, InvalidArgument (P ≤ 0) or NotPd.
    void validate() const;
};

struct TransformedProblem {
    ComplexMatrix gbar; ///< Rx^{1/2} G Rx^{1/2}
    ComplexMatrix t;    ///< Hᴴ Rv⁻¹ H
    Eigendecomposition evd_gbar;
    Eigendecomposition evd_t;
    double det_rx_inv = 0.0;
};

TransformedProblem transform_problem(const PrecoderProblem& prob);

struct WaterfillResult {
    std::vector<double> allocations; ///< p_k = d_{c,k}², aligned with λ(T)
    double mu = 0.0;                 ///< 1 / water level; 0 when all channels are zero
    std::vector<std::size_t> active_set;
    double objective_log = 0.0; ///< Σ log(p_k λ_k(T) + λ_{p+1−k}(Ḡ))
    bool all_channels_zero = false;
};

/**
 * Maximises Σ log(p_k·gain_k + floor_k) subject to Σ p_k = P, p_k ≥ 0.
 *
 * The optimum is p_k = max(0, 1/μ − floor_k/gain_k) on channels with
 * gain_k > 0. The water level 1/μ is located by bisection on the increasing
 * map level ↦ Σ max(0, level − floor_k/gain_k) and then snapped to the closed
 * form (P + Σ_active thresholds) / |active| for the active set found.
 * Channels with zero gain get nothing; when every gain is zero the result
 * is flagged all_channels_zero with μ = 0.
 */
WaterfillResult waterfill_general(std::span<const double> gains, std::span<const double> floors, double power);

/// The scalar program left after the unitary search: gains λ_k(T), floors
/// λ_{p+1−k}(Ḡ). Allocations come out non-increasing in k.
WaterfillResult waterfill(const Spectrum& lam_t, const Spectrum& lam_g, double power);

struct PrecoderSolution {
    ComplexMatrix c;
    DiagonalScaling dc;
    WaterfillResult waterfill;
    double objective = 0.0; ///< det(G + CᴴHᴴRv⁻¹HC)
    double bound = 0.0;     ///< det(Rx⁻¹)·∏(p_kλ_k(T) + λ_{p+1−k}(Ḡ))
};

/**
 * Closed-form optimum. With the EVDs T = U_t D_t U_tᴴ and Ḡ = U_g D_g U_gᴴ,
 * the optimal unitaries are U_c = U_t and V_c = U_g·J (J the anti-identity),
 * D_c comes from waterfill, C̄ = U_c D_c V_cᴴ and C = C̄·Rx^{-1/2}.
 */
PrecoderSolution solve_precoder(const PrecoderProblem& prob);

/// det(G + CᴴHᴴRv⁻¹HC). Throws NonHermitianResult if the determinant carries
/// an imaginary part above 1e-9·|value|.
double evaluate_objective(const ComplexMatrix& c, const PrecoderProblem& prob);
/// Same, with T = HᴴRv⁻¹H precomputed.
double evaluate_objective(const ComplexMatrix& c, const ComplexMatrix& g, const ComplexMatrix& t);

struct PowerReport {
    double used = 0.0;
    bool feasible = false;
};

/// tr(C Rx Cᴴ) against the budget with relative slack 1e-9.
PowerReport check_power(const ComplexMatrix& c, const ComplexMatrix& rx, double power);

struct OracleReport {
    double closed_form = 0.0;
    double best_random_precoder = 0.0;
    double best_unitary_pair = 0.0;
    std::size_t trials = 0;
    bool dominates = false;
};

/// Relative slack allowed for a sampled candidate above the closed form.
inline constexpr double kOracleSlack = 1e-8;

/**
 * Monte-Carlo check of the closed form. Samples `trials` random precoders
 * scaled to use exactly the budget, and `trials_unitary` random unitary pairs
 * (Ū_c, V̄_c), each with its own diagonal re-optimised by water-filling on
 * the diagonals of Ū_cᴴD_tŪ_c and V̄_cᴴD_gV̄_c.
 */
OracleReport run_dominance_oracle(const PrecoderProblem& prob, const PrecoderSolution& solution, std::size_t trials,
                                  std::size_t trials_unitary, std::uint64_t seed, double slack = kOracleSlack);

} // namespace detineq
