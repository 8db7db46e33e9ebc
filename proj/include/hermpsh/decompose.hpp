#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hermpsh/foliation.hpp"
#include "hermpsh/herm_poly.hpp"
#include "hermpsh/linear_algebra.hpp"
#include "hermpsh/perfect_power.hpp"

namespace hermpsh {

struct Proportionality {
    bool holds = false;
    // Set when holds: f == factor * base^exponent.
    GaussianRational factor;
    unsigned exponent = 0;
    HoloPoly base;
};

/// (deg g) g df/dz_l == (deg f) f dg/dz_l for all l; on success expresses f
/// through the perfect-power base of g.
Proportionality power_proportionality_check(const HoloPoly& f, const HoloPoly& g);

/// P == s(h(z)) with s a one-variable Hermitian polynomial in tau, conj(tau).
struct SingleDecomposition {
    HermPoly s;
    HoloPoly h;
    bool verified = false;
};

/// Throws NotDecomposable when no (s, h) exists.
SingleDecomposition decompose_single(const HermPoly& p);

/// Monic base obtained from one chosen P_beta (the step decompose_single runs
/// on the minimal-degree part). Exposed for base-choice checks.
HoloPoly base_from_part(const HermPoly& p, const MultiIndex& beta);

/// P(Phi(z)) == Q(mu z_{l+1}, ..., mu z_n) with Phi raising the block
/// variables to (k-D)/d and mu = z_1^{d_1/d} ... z_l^{d_l/d}.
struct SeparateDecomposition {
    HermPoly q;  // in the n - l trailing variables
    BlockParameters block;
    std::map<MultiIndex, unsigned, std::greater<>> m_beta;
    bool verified = false;

    /// Coordinate change (z_1^e, ..., z_l^e, z_{l+1}, ..., z_n), e = (k-D)/d.
    std::vector<HoloPoly> coordinate_change(std::size_t dim) const;
    /// (mu z_{l+1}, ..., mu z_n).
    std::vector<HoloPoly> monomial_map(std::size_t dim) const;
};

/// Throws HypothesisViolation, DegenerateCodimension.
SeparateDecomposition decompose_separate(const HermPoly& p, std::size_t block_size);

/// q_beta with P_beta = z_1^{2d_1-beta_1} ... z_l^{2d_l-beta_l} q_beta(z_{l+1}, ..., z_n).
/// Throws HypothesisViolation when P_beta is not of that shape.
HoloPoly strip_block_monomial(const HoloPoly& part, const MultiIndex& beta, const BlockParameters& block);

/// P == s(z_1^{e_1} ... z_n^{e_n}).
struct FullDecomposition {
    HermPoly s;
    std::vector<unsigned> exponents;
    bool verified = false;
};

/// Throws HypothesisViolation.
FullDecomposition decompose_full(const HermPoly& p);

/// tau^{e} monomial map z -> z_1^{e_1} ... z_n^{e_n} as a single component.
HoloPoly monomial_of(const std::vector<unsigned>& exponents);

}  // namespace hermpsh
