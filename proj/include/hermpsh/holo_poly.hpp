#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "hermpsh/multi_index.hpp"
#include "hermpsh/sparse_poly.hpp"

namespace hermpsh {

/// Holomorphic polynomial in z_1..z_n over Q(i).
class HoloPoly : public detail::SparsePolynomial<HoloPoly, MultiIndex> {
public:
    using SparsePolynomial::SparsePolynomial;

    static HoloPoly zero(std::size_t dim) { return HoloPoly(dim); }
    static HoloPoly one(std::size_t dim) { return constant(dim, 1); }
    static HoloPoly constant(std::size_t dim, const GaussianRational& c);
    static HoloPoly variable(std::size_t dim, std::size_t j);
    static HoloPoly monomial(const MultiIndex& alpha, const GaussianRational& c = 1);

    /// Maximum order over the support; 0 for the zero polynomial.
    unsigned degree() const noexcept;
    /// Degree if every term has the same order, nullopt otherwise (and for zero).
    std::optional<unsigned> homogeneous_degree() const;
    bool is_constant() const;

    /// d/dz_j
    HoloPoly derivative(std::size_t j) const;
    /// Polynomial with every coefficient conjugated (z -> conj(f(conj z))).
    HoloPoly conj_coefficients() const;
    /// Leading coefficient equal to 1; zero stays zero.
    HoloPoly monic() const;

    /// f(g_1, ..., g_n); all g_j share one source dimension.
    HoloPoly substitute(std::span<const HoloPoly> map) const;

    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
    GaussianRational evaluate(std::span<const GaussianRational> point) const;
};

/// Quotient a / b when b divides a exactly in Q(i)[z], nullopt otherwise.
std::optional<HoloPoly> divide_exact(const HoloPoly& a, const HoloPoly& b);

/// Coordinates of the identity map on C^n.
std::vector<HoloPoly> identity_map(std::size_t dim);

}  // namespace hermpsh
