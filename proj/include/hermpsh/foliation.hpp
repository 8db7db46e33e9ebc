#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hermpsh/herm_poly.hpp"
#include "hermpsh/profile.hpp"

namespace hermpsh {

/// P(z) = sum_beta conj(z)^beta P_beta(z) with each P_beta holomorphic.
struct BetaDecomposition {
    HermPoly source;
    unsigned total_degree = 0;  // 2k
    std::map<MultiIndex, HoloPoly, std::greater<>> parts;

    /// sum_beta conj(z)^beta P_beta(z)
    HermPoly reassemble() const;
};

/// Throws NotHomogeneous, HasPluriharmonicTerms, ZeroPolynomial.
BetaDecomposition p_beta_decompose(const HermPoly& p);

/// G = z_1^{d_1}...z_l^{d_l} (z_{l+1}^{k-D}, ..., z_n^{k-D}) and the l
/// holomorphic fields spanning ker G' away from the coordinate hyperplanes.
struct FoliationMap {
    std::vector<HoloPoly> components;
    std::vector<std::vector<HoloPoly>> null_fields;
};

/// Throws ProfileIncomplete, DegenerateCodimension.
FoliationMap build_foliation_map(const HomogeneityProfile& profile, std::size_t block_size);

/// Jacobian of G times each field vanishes identically.
bool fields_in_jacobian_kernel(const FoliationMap& f);

struct NullDirectionCheck {
    bool passed = true;
    /// L(P; z, W(z)) per field; all zero when passed.
    std::vector<MixedPoly> residuals;
};

NullDirectionCheck verify_levi_null_directions(const HermPoly& p, const FoliationMap& f);

struct DeterminantCheck {
    bool passed = true;
    /// beta values (with P_beta != 0) at which the two sides differ.
    std::vector<MultiIndex> failures;
    std::size_t checked = 0;
};

/// Compares det(dG/dz_rows) dP_beta/dz_col against the row-replacement sum
/// for every nonzero P_beta, exactly. Rows and column are 0-based.
/// Throws DimensionMismatch, SingularMap (every m x m minor of G' vanishes).
DeterminantCheck determinant_identity_check(const HermPoly& p, const std::vector<HoloPoly>& g,
                                            const std::vector<std::size_t>& rows, std::size_t col);

/// True iff some m x m minor of the Jacobian of g is a nonzero polynomial.
bool has_generic_full_rank(const std::vector<HoloPoly>& g, std::size_t dim);

}  // namespace hermpsh
