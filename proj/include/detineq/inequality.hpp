#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detineq/matrix.hpp"

namespace detineq {

/// Default slack for Theorem1Report::holds: lhs ≤ rhs·(1 + rel) + abs.
inline constexpr double kBoundRelTol = 1e-9;
inline constexpr double kBoundAbsTol = 1e-12;

struct Theorem1Report {
    double lhs = 0.0;   ///< det(DᴴAD + B) from the assembled matrix
    double rhs = 0.0;   ///< ∏ (d_k²λ_k(A) + λ_{N+1−k}(B)) from the spectra
    double slack = 0.0; ///< rhs − lhs
    bool holds = false;
    Spectrum spectrum_a;
    Spectrum spectrum_b;
    Spectrum scaling; ///< d
};

/// ∏ₖ (d_k²·λ_k(A) + λ_{N+1−k}(B)): largest of A meets smallest of B.
double theorem1_rhs(const Spectrum& spec_a, const Spectrum& spec_b, const DiagonalScaling& d);

/**
 * Checks det(DᴴAD + B) ≤ ∏ (d_k²λ_k(A) + λ_{N+1−k}(B)) for PSD A, B.
 *
 * The two sides travel independent numerical paths: lhs is an LU
 * determinant of the assembled matrix, rhs is built from Jacobi spectra.
 * A false `holds` means something upstream is broken.
 *
 * Throws DimensionMismatch, NotPsd, NotHermitian.
 */
Theorem1Report verify_theorem1(const ComplexMatrix& a, const ComplexMatrix& b, const DiagonalScaling& d,
                               double rel_tol = kBoundRelTol);

/// "lhs=… rhs=… slack=… holds=true|false"
std::string format_report(const Theorem1Report& report);

struct SandwichBounds {
    double lower = 0.0; ///< ∏ (λ_k(X) + λ_k(Y))
    double upper = 0.0; ///< ∏ (λ_k(X) + λ_{N+1−k}(Y))
};

/// Lower/upper eigenvalue-product bounds on det(X + Y) for PSD X, Y.
SandwichBounds horn_johnson_bounds(const ComplexMatrix& x, const ComplexMatrix& y);

struct GammaChainReport {
    Spectrum gamma_spectrum;             ///< λ(DᴴAD)
    std::vector<double> scaled_spectrum; ///< d_k²·λ_k(A)
    std::vector<double> gamma_partials;  ///< ∏_{k≤K} λ_k(Γ), K = 1..N
    std::vector<double> bound_partials;  ///< ∏_{k≤K} d_k²λ_k(A), K = 1..N
    bool partials_hold = false;          ///< gamma ≤ bound for every K < N
    bool equal_at_n = false;             ///< totals agree to 1e-9 relative
};

/// Leading-product comparison between the spectrum of Γ = DᴴAD and d²·λ(A).
GammaChainReport gamma_product_chain(const ComplexMatrix& a, const DiagonalScaling& d);

/// The diagonal pair attaining the bound: A = diag(λ(A)) descending, B = diag(λ(B)) ascending.
std::pair<ComplexMatrix, ComplexMatrix> equality_witness(const Spectrum& spec_a, const Spectrum& spec_b,
                                                         const DiagonalScaling& d);

struct Theorem1Instance {
    ComplexMatrix a;
    ComplexMatrix b;
    std::vector<double> d; ///< unchecked; DiagonalScaling validates on use
};

} // namespace detineq
