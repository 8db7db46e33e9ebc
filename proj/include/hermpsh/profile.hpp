#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermpsh/herm_poly.hpp"

namespace hermpsh {

/// Parameters of a leading block z_1..z_l of separately homogeneous variables.
struct BlockParameters {
    std::size_t size = 0;                // l
    unsigned half_total = 0;             // k
    std::vector<unsigned> half_degrees;  // d_1..d_l
    unsigned block_sum = 0;              // D = d_1 + ... + d_l
    unsigned block_gcd = 0;              // d = gcd(d_1, ..., d_l, k)

    /// k - D, positive by construction.
    unsigned codimension_degree() const { return half_total - block_sum; }
    /// (k - D) / d
    unsigned exponent_divisor() const { return codimension_degree() / block_gcd; }
};

/// Degree data of a nonzero Hermitian polynomial.
struct HomogeneityProfile {
    std::size_t dim = 0;
    /// Common |alpha| + |beta| over the support (2k), when there is one.
    std::optional<unsigned> total_degree;
    /// Common alpha_j + beta_j per variable, when there is one.
    std::vector<std::optional<unsigned>> separate_degree;

    /// k, defined when the total degree exists and is even.
    std::optional<unsigned> half_total() const;
    /// d_j, defined when variable j is separately homogeneous of positive even degree.
    std::optional<unsigned> half_degree(std::size_t j) const;
    bool is_separately_homogeneous(std::size_t j) const { return half_degree(j).has_value(); }
    /// Indices j with half_degree(j) defined, ascending.
    std::vector<std::size_t> separate_variables() const;

    /// Block data for the first l variables. Throws ProfileIncomplete when k or
    /// some d_j is undefined, DegenerateCodimension when k - D <= 0.
    BlockParameters block(std::size_t l) const;
};

/// Throws ZeroPolynomial for P == 0.
HomogeneityProfile profile(const HermPoly& p);

}  // namespace hermpsh
