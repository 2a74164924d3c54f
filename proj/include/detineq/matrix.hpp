#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace detineq {

using Complex = std::complex<double>;

/**
 * Dense row-major complex matrix. Every other type in the library is built on
 * top of this one; it owns its storage and has value semantics.
 */
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws InvalidArgument when entries.size() != rows * cols or an entry is not finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> diag);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    Complex trace() const;
    double frobenius_norm() const;
    bool is_finite() const;

    /// ‖A − Aᴴ‖_F; zero for exactly Hermitian input.
    double hermitian_defect() const;
    /// (A + Aᴴ) / 2, with the diagonal made exactly real.
    ComplexMatrix hermitian_part() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

/// Real values in non-increasing order: eigenvalues or singular values.
class Spectrum {
public:
    Spectrum() = default;
    /// Throws InvalidArgument if values are unsorted or not finite.
    explicit Spectrum(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const noexcept { return values_; }

    double max() const { return values_.front(); }
    double min() const { return values_.back(); }
    double product() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<double> values_;
};

/// Non-negative diagonal in non-increasing order (the D of the determinant bound).
class DiagonalScaling {
public:
    DiagonalScaling() = default;
    /// Throws NotDescending for unsorted entries, InvalidArgument for negative or non-finite ones.
    explicit DiagonalScaling(std::vector<double> diag);

    std::size_t size() const noexcept { return diag_.size(); }
    double operator[](std::size_t k) const { return diag_[k]; }
    std::span<const double> values() const noexcept { return diag_; }

    ComplexMatrix as_matrix() const { return ComplexMatrix::diagonal(std::span<const double>(diag_)); }

private:
    std::vector<double> diag_;
};

bool is_non_increasing(std::span<const double> values) noexcept;

} // namespace detineq
