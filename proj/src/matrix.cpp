#include "detineq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detineq/error.hpp"

namespace detineq {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::InvalidArgument,
                    "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                        std::to_string(data_.size()));
    }
    if (!is_finite()) throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double ComplexMatrix::hermitian_defect() const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "hermitian_defect needs a square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
    return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "hermitian_part needs a square matrix");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out(i, i) = (*this)(i, i).real();
        for (std::size_t j = i + 1; j < cols_; ++j) {
            const Complex v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows())
        throw Error(ErrorKind::DimensionMismatch, "matrix product inner dimensions differ");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool is_non_increasing(std::span<const double> values) noexcept {
    for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k] > values[k - 1]) return false;
    return true;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "spectrum values must be finite");
    if (!is_non_increasing(values_))
        throw Error(ErrorKind::InvalidArgument, "spectrum must be sorted in non-increasing order");
}

double Spectrum::product() const {
    double p = 1.0;
    for (double v : values_) p *= v;
    return p;
}

DiagonalScaling::DiagonalScaling(std::vector<double> diag) : diag_(std::move(diag)) {
    for (double v : diag_) {
        if (!std::isfinite(v) || v < 0.0)
            throw Error(ErrorKind::InvalidArgument, "diagonal scaling entries must be finite and non-negative");
    }
    if (!is_non_increasing(diag_))
        throw Error(ErrorKind::NotDescending, "diagonal scaling must be sorted in non-increasing order");
}

} // namespace detineq
