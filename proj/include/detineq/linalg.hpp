#pragma once

#include <cstdint>

#include "detineq/matrix.hpp"
#include "detineq/random.hpp"

namespace detineq {

struct Eigendecomposition {
    Spectrum spectrum;
    ComplexMatrix basis; ///< columns are the eigenvectors, in spectrum order

    /// basis · diag(spectrum) · basisᴴ
    ComplexMatrix reconstruct() const;
};

struct SvdResult {
    ComplexMatrix left;  ///< rows × rows unitary
    Spectrum singular;   ///< min(rows, cols) values, non-negative
    ComplexMatrix right; ///< cols × cols unitary

    ComplexMatrix reconstruct() const;
};

struct JacobiOptions {
    int max_sweeps = 100;
    double hermitian_tolerance = 1e-9;
};

/**
 * Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps with
 * complex 2×2 rotations.
 *
 * A pair (p, q) is rotated while |a_pq| exceeds eps·sqrt(|a_pp·a_qq|); the
 * sweep loop stops once a full sweep rotates nothing. At that point the
 * off-diagonal Frobenius norm is below 1e-13·‖A‖_F.
 *
 * Eigenvalues come back in non-increasing order; equal values keep the
 * order of their diagonal positions.
 *
 * Throws NotHermitian if ‖A − Aᴴ‖_F > 1e-9·max(1, ‖A‖_F), NoConvergence
 * after options.max_sweeps sweeps.
 */
Eigendecomposition hermitian_evd(const ComplexMatrix& a, const JacobiOptions& options = {});

/// SVD through the eigendecomposition of MᴴM. Singular values are the norms
/// ‖M·v_k‖; left vectors are the normalised M·v columns, completed and
/// re-orthonormalised by modified Gram–Schmidt.
SvdResult svd(const ComplexMatrix& m);

/// LU with partial pivoting. Singular input gives 0.
Complex determinant(const ComplexMatrix& a);

/// Relative clamp for PSD acceptance: eigenvalues in [−kPsdClamp·λ_max, 0) become 0.
inline constexpr double kPsdClamp = 1e-10;
/// Positive definiteness: λ_min > kPdThreshold·λ_max.
inline constexpr double kPdThreshold = 1e-12;

/// Eigendecomposition with the PSD clamp applied; throws NotPsd past the clamp.
Eigendecomposition psd_evd(const ComplexMatrix& a);
/// Eigendecomposition of a positive definite matrix; throws NotPd.
Eigendecomposition pd_evd(const ComplexMatrix& a);

bool is_psd(const ComplexMatrix& a);
bool is_pd(const ComplexMatrix& a);

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a);
ComplexMatrix matrix_inv_sqrt_pd(const ComplexMatrix& a);
ComplexMatrix matrix_inverse_pd(const ComplexMatrix& a);

/// Ones on the anti-diagonal; reverses coordinate order.
ComplexMatrix anti_identity(std::size_t n);

/// Complex Gaussian matrix orthonormalised by modified Gram–Schmidt.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// Same construction, drawing from an existing generator.
ComplexMatrix random_unitary(std::size_t n, SplitMix64& rng);

/// ‖U·Uᴴ − I‖_F
double unitarity_defect(const ComplexMatrix& u);

/// Q · diag(values) · Qᴴ, made exactly Hermitian.
ComplexMatrix unitary_similarity(const ComplexMatrix& q, std::span<const double> values);

} // namespace detineq
