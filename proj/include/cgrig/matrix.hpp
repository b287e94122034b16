#pragma once

#include "cgrig/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cgrig {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// Submatrix on the given rows and columns, in the given order.
    Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        Matrix out(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
        }
        return out;
    }
    Matrix without_row(std::size_t r) const {
        Matrix out(rows_ - 1, cols_);
        for (std::size_t i = 0, k = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(i, j);
            ++k;
        }
        return out;
    }
    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using MatrixFp = Matrix<Fp>;
using MatrixD = Matrix<double>;

/// Rank over F_p by Gaussian elimination.
std::size_t rank(MatrixFp m);
/// Determinant of a square matrix over F_p; throws DomainError otherwise.
Fp determinant(MatrixFp m);
/// Determinant by LU with partial pivoting; throws DomainError if not square.
double determinant(MatrixD m);

/// Rank and an orthonormal basis of the numerical null space.
struct FloatKernel {
    std::size_t rank = 0;
    /// Each entry has length cols().
    std::vector<std::vector<double>> basis;
};

/// Householder QR with column pivoting applied to the transpose, so the
/// pivots run over rows of `m`. A pivot counts when it exceeds
/// tolerance * |first pivot|. Throws DomainError when tolerance <= 0.
FloatKernel kernel_float(const MatrixD& m, double tolerance = 1e-9);
std::size_t rank_float(const MatrixD& m, double tolerance = 1e-9);

/// Matrix of doubles with entries mapped through the canonical residue
/// representative in (-p/2, p/2].
MatrixD to_double(const MatrixFp& m);

} // namespace cgrig
