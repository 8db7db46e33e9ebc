#pragma once

#include <complex>
#include <span>

#include "hermpsh/holo_poly.hpp"
#include "hermpsh/multi_index.hpp"
#include "hermpsh/sparse_poly.hpp"

namespace hermpsh {

/// Polynomial in z and zbar with no realness constraint. Intermediate
/// results (Hessian entries, Levi expansions, parser output) live here.
class MixedPoly : public detail::SparsePolynomial<MixedPoly, BiIndex> {
public:
    using SparsePolynomial::SparsePolynomial;

    static MixedPoly zero(std::size_t dim) { return MixedPoly(dim); }
    static MixedPoly one(std::size_t dim) { return constant(dim, 1); }
    static MixedPoly constant(std::size_t dim, const GaussianRational& c);
    static MixedPoly monomial(const MultiIndex& alpha, const MultiIndex& beta, const GaussianRational& c = 1);
    /// f(z) viewed as a mixed polynomial.
    static MixedPoly from_holo(const HoloPoly& f);
    /// conj(f(z)), an anti-holomorphic polynomial.
    static MixedPoly conj_of_holo(const HoloPoly& f);

    /// Complex conjugate as a function: swaps alpha/beta and conjugates coefficients.
    MixedPoly conj() const;
    bool is_hermitian() const;

    /// d/dz_j and d/dzbar_j.
    MixedPoly d_holo(std::size_t j) const;
    MixedPoly d_anti(std::size_t j) const;

    /// P(Phi(w)) with the conjugated map in the zbar slots.
    MixedPoly compose_holo(std::span<const HoloPoly> map) const;

    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
    GaussianRational evaluate(std::span<const GaussianRational> point) const;
};

}  // namespace hermpsh
