#include "hermpsh/linear_algebra.hpp"

#include <map>
#include <utility>

namespace hermpsh {

std::size_t rank(Matrix<GaussianRational> m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(r, c));
        const GaussianRational inv = GaussianRational(1) / m(r, col);
        for (std::size_t row = r + 1; row < m.rows(); ++row) {
            if (m(row, col).is_zero()) continue;
            const GaussianRational f = m(row, col) * inv;
            for (std::size_t c = col; c < m.cols(); ++c) m(row, c) -= f * m(r, c);
        }
        ++r;
    }
    return r;
}

std::size_t span_dimension(const std::vector<HoloPoly>& polys) {
    if (polys.empty()) return 0;
    std::map<MultiIndex, std::size_t> column;
    for (const auto& p : polys) {
        if (p.dim() != polys.front().dim())
            throw Error(ErrorCode::DimensionMismatch, "span_dimension needs a common dimension");
        for (const auto& [alpha, c] : p) column.try_emplace(alpha, column.size());
    }
    Matrix<GaussianRational> m(polys.size(), column.size(), GaussianRational{});
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [alpha, c] : polys[r]) m(r, column.at(alpha)) = c;
    return rank(std::move(m));
}

namespace {

HoloPoly cofactor_determinant(const Matrix<HoloPoly>& m, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t dim = m(0, 0).dim();
    if (row == m.rows()) return HoloPoly::one(dim);
    HoloPoly sum(dim);
    bool negative = false;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const std::size_t c = cols[idx];
        if (!m(row, c).is_zero()) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
            HoloPoly minor = cofactor_determinant(m, cols, row + 1);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
            HoloPoly term = m(row, c) * minor;
            if (negative) sum -= term; else sum += term;
        }
        negative = !negative;
    }
    return sum;
}

HoloPoly bareiss_determinant(Matrix<HoloPoly> m) {
    const std::size_t n = m.rows();
    const std::size_t dim = m(0, 0).dim();
    HoloPoly previous = HoloPoly::one(dim);
    bool negative = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return HoloPoly::zero(dim);
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            negative = !negative;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                HoloPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                auto q = divide_exact(num, previous);
                if (!q) throw Error(ErrorCode::InvalidArgument, "fraction-free elimination lost exactness");
                m(i, j) = std::move(*q);
            }
        }
        previous = m(k, k);
    }
    return negative ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace

HoloPoly determinant(const Matrix<HoloPoly>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    if (m.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "determinant of an empty matrix");
    if (m.rows() <= 4) {
        std::vector<std::size_t> cols(m.cols());
        for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
        return cofactor_determinant(m, cols, 0);
    }
    return bareiss_determinant(m);
}

}  // namespace hermpsh
