#include "detineq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "detineq/error.hpp"

namespace detineq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_square(const ComplexMatrix& a, const char* what) {
    if (!a.is_square() || a.empty())
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a non-empty square matrix");
}

// Column k of m, as a vector.
std::vector<Complex> column(const ComplexMatrix& m, std::size_t k) {
    std::vector<Complex> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, k);
    return v;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

// Removes from v its components along every column of q. Columns not yet
// filled are zero and drop out.
void project_out(std::vector<Complex>& v, const ComplexMatrix& q) {
    for (std::size_t k = 0; k < q.cols(); ++k) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(q(i, k)) * v[i];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * q(i, k);
    }
}

// Writes v into the (zero) column k of q after two Gram–Schmidt passes and
// normalisation. Returns false if v is numerically dependent.
bool orthonormalize_into(std::vector<Complex> v, ComplexMatrix& q, std::size_t k, double min_norm) {
    const double before = norm2(v);
    if (before == 0.0) return false;
    project_out(v, q);
    project_out(v, q);
    const double after = norm2(v);
    if (after <= min_norm * before) return false;
    for (std::size_t i = 0; i < v.size(); ++i) q(i, k) = v[i] / after;
    return true;
}

// Fills column k of q with the standard basis vector that survives
// orthogonalisation best.
void complete_column(ComplexMatrix& q, std::size_t k) {
    const std::size_t n = q.rows();
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Complex> e(n);
        e[j] = 1.0;
        project_out(e, q);
        const double r = norm2(e);
        if (r > best_norm) {
            best_norm = r;
            best = j;
        }
    }
    std::vector<Complex> e(n);
    e[best] = 1.0;
    orthonormalize_into(std::move(e), q, k, 0.0);
}

// One complex Jacobi rotation zeroing a(p, q); accumulates into v.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    const Complex phase_conj = std::conj(apq / mag); // e^{-iφ}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * mag);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // G = diag(1, e^{-iφ}) · [[c, s], [-s, c]] acting on (p, q).
    const Complex g_qp = -s * phase_conj;
    const Complex g_qq = c * phase_conj;

    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp + g_qp * akq;
        a(k, q) = s * akp + g_qq * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk + std::conj(g_qp) * aqk;
        a(q, k) = s * apk + std::conj(g_qq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp + g_qp * vkq;
        v(k, q) = s * vkp + g_qq * vkq;
    }
}

Eigendecomposition checked_evd(const ComplexMatrix& a, bool strict_pd) {
    Eigendecomposition evd = hermitian_evd(a);
    std::vector<double> values(evd.spectrum.values().begin(), evd.spectrum.values().end());
    const double top = values.front();
    const double bottom = values.back();
    if (strict_pd) {
        if (!(top > 0.0) || !(bottom > kPdThreshold * top))
            throw Error(ErrorKind::NotPd, "matrix is not positive definite (lambda_min = " +
                                              std::to_string(bottom) + ", lambda_max = " + std::to_string(top) + ")");
        return evd;
    }
    if (bottom < -kPsdClamp * std::max(top, 0.0))
        throw Error(ErrorKind::NotPsd, "matrix is not positive semi-definite (lambda_min = " +
                                           std::to_string(bottom) + ")");
    for (auto& v : values) v = std::max(v, 0.0);
    evd.spectrum = Spectrum(std::move(values));
    return evd;
}

ComplexMatrix spectral_function(const Eigendecomposition& evd, double (*fn)(double)) {
    std::vector<double> mapped;
    mapped.reserve(evd.spectrum.size());
    for (double v : evd.spectrum.values()) mapped.push_back(fn(v));
    return unitary_similarity(evd.basis, mapped);
}

} // namespace

ComplexMatrix Eigendecomposition::reconstruct() const { return unitary_similarity(basis, spectrum.values()); }

ComplexMatrix SvdResult::reconstruct() const {
    ComplexMatrix sigma(left.cols(), right.cols());
    for (std::size_t k = 0; k < singular.size(); ++k) sigma(k, k) = singular[k];
    return left * sigma * right.adjoint();
}

Eigendecomposition hermitian_evd(const ComplexMatrix& input, const JacobiOptions& options) {
    require_square(input, "hermitian_evd");
    if (!input.is_finite()) throw Error(ErrorKind::InvalidArgument, "hermitian_evd input is not finite");
    const double norm = input.frobenius_norm();
    if (input.hermitian_defect() > options.hermitian_tolerance * std::max(1.0, norm))
        throw Error(ErrorKind::NotHermitian, "asymmetry exceeds tolerance");

    const std::size_t n = input.rows();
    ComplexMatrix a = input.hermitian_part();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double floor = kEps * kEps * norm;

    bool converged = false;
    for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                const double scale = std::sqrt(std::abs(a(p, p).real() * a(q, q).real()));
                if (mag <= floor || mag <= kEps * scale) continue;
                rotate(a, v, p, q);
                ++rotations;
            }
        }
        converged = rotations == 0;
    }
    if (!converged)
        throw Error(ErrorKind::NoConvergence, "Jacobi sweep budget of " + std::to_string(options.max_sweeps) +
                                                  " exhausted");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    std::vector<double> values(n);
    ComplexMatrix basis(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) basis(i, k) = v(i, order[k]);
    }
    return {Spectrum(std::move(values)), std::move(basis)};
}

SvdResult svd(const ComplexMatrix& m) {
    if (m.empty()) throw Error(ErrorKind::DimensionMismatch, "svd needs a non-empty matrix");
    if (!m.is_finite()) throw Error(ErrorKind::InvalidArgument, "svd input is not finite");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t rank_cap = std::min(rows, cols);

    const Eigendecomposition gram = hermitian_evd((m.adjoint() * m).hermitian_part());

    // σ_k = ‖M·v_k‖
    std::vector<std::vector<Complex>> images(rank_cap, std::vector<Complex>(rows));
    std::vector<double> norms(rank_cap, 0.0);
    for (std::size_t k = 0; k < rank_cap; ++k) {
        double sq = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * gram.basis(j, k);
            images[k][i] = acc;
            sq += std::norm(acc);
        }
        norms[k] = std::sqrt(sq);
    }
    std::vector<std::size_t> order(rank_cap);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    ComplexMatrix right = gram.basis;
    std::vector<double> sigma(rank_cap);
    for (std::size_t k = 0; k < rank_cap; ++k) {
        sigma[k] = norms[order[k]];
        for (std::size_t j = 0; j < cols; ++j) right(j, k) = gram.basis(j, order[k]);
    }

    const double cutoff = sigma.front() * 1e-14;
    ComplexMatrix left(rows, rows);
    std::vector<bool> filled(rows, false);
    for (std::size_t k = 0; k < rank_cap; ++k) {
        if (sigma[k] <= cutoff || sigma[k] == 0.0) continue;
        std::vector<Complex> u = images[order[k]];
        for (auto& x : u) x /= sigma[k];
        filled[k] = orthonormalize_into(std::move(u), left, k, 1e-8);
    }
    for (std::size_t k = 0; k < rows; ++k)
        if (!filled[k]) complete_column(left, k);

    return {std::move(left), Spectrum(std::move(sigma)), std::move(right)};
}

Complex determinant(const ComplexMatrix& input) {
    require_square(input, "determinant");
    ComplexMatrix a = input;
    const std::size_t n = a.rows();
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                pivot = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            det = -det;
        }
        const Complex diag = a(k, k);
        det *= diag;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = a(i, k) / diag;
            if (factor == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return det;
}

Eigendecomposition psd_evd(const ComplexMatrix& a) { return checked_evd(a, false); }
Eigendecomposition pd_evd(const ComplexMatrix& a) { return checked_evd(a, true); }

bool is_psd(const ComplexMatrix& a) {
    try {
        psd_evd(a);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool is_pd(const ComplexMatrix& a) {
    try {
        pd_evd(a);
        return true;
    } catch (const Error&) {
        return false;
    }
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
    return spectral_function(psd_evd(a), [](double x) { return std::sqrt(x); });
}

ComplexMatrix matrix_inv_sqrt_pd(const ComplexMatrix& a) {
    return spectral_function(pd_evd(a), [](double x) { return 1.0 / std::sqrt(x); });
}

ComplexMatrix matrix_inverse_pd(const ComplexMatrix& a) {
    return spectral_function(pd_evd(a), [](double x) { return 1.0 / x; });
}

ComplexMatrix anti_identity(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "anti_identity needs n >= 1");
    ComplexMatrix j(n, n);
    for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
    return j;
}

ComplexMatrix random_unitary(std::size_t n, SplitMix64& rng) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "random_unitary needs n >= 1");
    const ComplexMatrix g = gaussian_matrix(n, n, rng);
    ComplexMatrix q(n, n);
    for (std::size_t k = 0; k < n; ++k)
        if (!orthonormalize_into(column(g, k), q, k, 1e-8)) complete_column(q, k);
    return q;
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_unitary(n, rng);
}

double unitarity_defect(const ComplexMatrix& u) {
    return (u * u.adjoint() - ComplexMatrix::identity(u.rows())).frobenius_norm();
}

ComplexMatrix unitary_similarity(const ComplexMatrix& q, std::span<const double> values) {
    if (q.cols() != values.size()) throw Error(ErrorKind::DimensionMismatch, "unitary_similarity size mismatch");
    ComplexMatrix scaled = q;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t k = 0; k < q.cols(); ++k) scaled(i, k) *= values[k];
    return (scaled * q.adjoint()).hermitian_part();
}

} // namespace detineq
