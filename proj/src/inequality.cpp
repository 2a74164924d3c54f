#include "detineq/inequality.hpp"

#include <algorithm>
#include <cmath>

#include "detineq/error.hpp"
#include "detineq/linalg.hpp"
#include "detineq/majorization.hpp"
#include "detineq/text_format.hpp"

namespace detineq {

namespace {

void require_size(std::size_t actual, std::size_t expected, const char* what) {
    if (actual != expected)
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": expected size " + std::to_string(expected) +
                                                      ", got " + std::to_string(actual));
}

void require_non_negative(const Spectrum& s, const char* what) {
    if (s.size() && s.min() < 0.0) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be non-negative");
}

void require_square_pair(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows() || x.empty())
        throw Error(ErrorKind::DimensionMismatch, "expected two square matrices of equal size");
}

// D is real and diagonal, so DᴴAD scales entry (i, j) by d_i·d_j.
ComplexMatrix scale_both_sides(const ComplexMatrix& a, std::span<const double> d) {
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= d[i] * d[j];
    return out;
}

} // namespace

double theorem1_rhs(const Spectrum& spec_a, const Spectrum& spec_b, const DiagonalScaling& d) {
    if (spec_a.size() != spec_b.size() || spec_a.size() != d.size())
        throw Error(ErrorKind::LengthMismatch, "theorem1_rhs needs spectra and scaling of equal length");
    require_non_negative(spec_a, "spectrum of A");
    require_non_negative(spec_b, "spectrum of B");
    const std::size_t n = spec_a.size();
    double product = 1.0;
    for (std::size_t k = 0; k < n; ++k) product *= d[k] * d[k] * spec_a[k] + spec_b[n - 1 - k];
    return product;
}

Theorem1Report verify_theorem1(const ComplexMatrix& a, const ComplexMatrix& b, const DiagonalScaling& d,
                               double rel_tol) {
    require_square_pair(a, b);
    require_size(d.size(), a.rows(), "diagonal scaling");

    Theorem1Report report;
    report.spectrum_a = psd_evd(a).spectrum;
    report.spectrum_b = psd_evd(b).spectrum;
    report.scaling = Spectrum(std::vector<double>(d.values().begin(), d.values().end()));

    const ComplexMatrix assembled = scale_both_sides(a, d.values()) + b;
    // Negative values are LU round-off on a PSD matrix.
    report.lhs = std::max(0.0, determinant(assembled).real());
    report.rhs = theorem1_rhs(report.spectrum_a, report.spectrum_b, d);
    report.slack = report.rhs - report.lhs;
    report.holds = report.lhs <= report.rhs * (1.0 + rel_tol) + kBoundAbsTol;
    return report;
}

std::string format_report(const Theorem1Report& report) {
    return "lhs=" + format_real(report.lhs) + " rhs=" + format_real(report.rhs) +
           " slack=" + format_real(report.slack) + " holds=" + (report.holds ? "true" : "false");
}

SandwichBounds horn_johnson_bounds(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_square_pair(x, y);
    const Spectrum sx = psd_evd(x).spectrum;
    const Spectrum sy = psd_evd(y).spectrum;
    const std::size_t n = sx.size();
    SandwichBounds bounds{1.0, 1.0};
    for (std::size_t k = 0; k < n; ++k) {
        bounds.lower *= sx[k] + sy[k];
        bounds.upper *= sx[k] + sy[n - 1 - k];
    }
    return bounds;
}

GammaChainReport gamma_product_chain(const ComplexMatrix& a, const DiagonalScaling& d) {
    if (!a.is_square() || a.empty()) throw Error(ErrorKind::DimensionMismatch, "A must be square");
    require_size(d.size(), a.rows(), "diagonal scaling");
    const Spectrum spec_a = psd_evd(a).spectrum;

    GammaChainReport report;
    report.gamma_spectrum = psd_evd(scale_both_sides(a, d.values())).spectrum;
    const std::size_t n = spec_a.size();
    double gamma = 1.0;
    double bound = 1.0;
    report.partials_hold = true;
    for (std::size_t k = 0; k < n; ++k) {
        report.scaled_spectrum.push_back(d[k] * d[k] * spec_a[k]);
        gamma *= report.gamma_spectrum[k];
        bound *= report.scaled_spectrum.back();
        report.gamma_partials.push_back(gamma);
        report.bound_partials.push_back(bound);
        if (k + 1 < n &&
            gamma > bound * (1.0 + majorization_tolerance::kRelative) + majorization_tolerance::kAbsolute)
            report.partials_hold = false;
    }
    report.equal_at_n = std::abs(gamma - bound) <= majorization_tolerance::kRelative * std::max(gamma, bound) +
                                                       majorization_tolerance::kAbsolute;
    return report;
}

std::pair<ComplexMatrix, ComplexMatrix> equality_witness(const Spectrum& spec_a, const Spectrum& spec_b,
                                                         const DiagonalScaling& d) {
    if (spec_a.size() != spec_b.size() || spec_a.size() != d.size())
        throw Error(ErrorKind::LengthMismatch, "equality_witness needs spectra and scaling of equal length");
    require_non_negative(spec_a, "spectrum of A");
    require_non_negative(spec_b, "spectrum of B");
    std::vector<double> ascending(spec_b.values().rbegin(), spec_b.values().rend());
    return {ComplexMatrix::diagonal(spec_a.values()), ComplexMatrix::diagonal(std::span<const double>(ascending))};
}

} // namespace detineq
