#pragma once

#include <cstddef>
#include <vector>

#include "hermpsh/gaussian_rational.hpp"
#include "hermpsh/holo_poly.hpp"

namespace hermpsh {

/// Dense row-major matrix with value-type entries.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Exact rank over Q(i) by Gaussian elimination.
std::size_t rank(Matrix<GaussianRational> m);

/// Exact rank of the span of the given polynomials (coefficient matrix rank).
std::size_t span_dimension(const std::vector<HoloPoly>& polys);

/// Determinant of a square polynomial matrix. Cofactor expansion up to 4x4,
/// fraction-free (Bareiss) elimination above.
HoloPoly determinant(const Matrix<HoloPoly>& m);

}  // namespace hermpsh
