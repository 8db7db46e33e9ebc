#include "hermpsh/foliation.hpp"

#include "hermpsh/levi.hpp"
#include "hermpsh/linear_algebra.hpp"

namespace hermpsh {

HermPoly BetaDecomposition::reassemble() const {
    const std::size_t n = source.dim();
    MixedPoly sum(n);
    for (const auto& [beta, part] : parts)
        for (const auto& [alpha, c] : part) sum.add_term({alpha, beta}, c);
    return HermPoly(std::move(sum));
}

BetaDecomposition p_beta_decompose(const HermPoly& p) {
    const auto prof = profile(p);
    if (!prof.total_degree) throw Error(ErrorCode::NotHomogeneous, "P_beta decomposition needs a homogeneous polynomial");
    if (has_pluriharmonic_terms(p))
        throw Error(ErrorCode::HasPluriharmonicTerms, "P_beta decomposition needs a polynomial without pluriharmonic terms");
    BetaDecomposition out{p, *prof.total_degree, {}};
    for (const auto& [m, c] : p.terms()) {
        auto it = out.parts.try_emplace(m.anti, HoloPoly(p.dim())).first;
        it->second.add_term(m.holo, c);
    }
    return out;
}

FoliationMap build_foliation_map(const HomogeneityProfile& profile, std::size_t block_size) {
    const BlockParameters block = profile.block(block_size);
    const std::size_t n = profile.dim;
    const unsigned codim = block.codimension_degree();

    MultiIndex prefix(n);
    for (std::size_t j = 0; j < block_size; ++j) prefix[j] = block.half_degrees[j];

    FoliationMap out;
    for (std::size_t s = block_size; s < n; ++s)
        out.components.push_back(HoloPoly::monomial(prefix + MultiIndex::unit(n, s, codim)));
    for (std::size_t j = 0; j < block_size; ++j) {
        std::vector<HoloPoly> field(n, HoloPoly::zero(n));
        field[j] = HoloPoly::monomial(MultiIndex::unit(n, j), GaussianRational(codim));
        for (std::size_t s = block_size; s < n; ++s)
            field[s] = HoloPoly::monomial(MultiIndex::unit(n, s), -GaussianRational(block.half_degrees[j]));
        out.null_fields.push_back(std::move(field));
    }
    return out;
}

bool fields_in_jacobian_kernel(const FoliationMap& f) {
    for (const auto& g : f.components) {
        for (const auto& field : f.null_fields) {
            if (field.size() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "field length differs from dimension");
            HoloPoly sum = HoloPoly::zero(g.dim());
            for (std::size_t i = 0; i < field.size(); ++i) sum += g.derivative(i) * field[i];
            if (!sum.is_zero()) return false;
        }
    }
    return true;
}

NullDirectionCheck verify_levi_null_directions(const HermPoly& p, const FoliationMap& f) {
    NullDirectionCheck out;
    for (const auto& field : f.null_fields) {
        if (field.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "field length differs from dimension");
        MixedPoly residual = levi_form_along(p, field);
        if (!residual.is_zero()) out.passed = false;
        out.residuals.push_back(std::move(residual));
    }
    return out;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t m = idx.size();
    for (std::size_t i = m; i-- > 0;) {
        if (idx[i] < n - m + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

bool has_generic_full_rank(const std::vector<HoloPoly>& g, std::size_t dim) {
    const std::size_t m = g.size();
    if (m == 0 || m > dim) return false;
    std::vector<std::size_t> cols(m);
    for (std::size_t i = 0; i < m; ++i) cols[i] = i;
    do {
        Matrix<HoloPoly> minor(m, m, HoloPoly::zero(dim));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) minor(a, b) = g[a].derivative(cols[b]);
        if (!determinant(minor).is_zero()) return true;
    } while (next_combination(cols, dim));
    return false;
}

DeterminantCheck determinant_identity_check(const HermPoly& p, const std::vector<HoloPoly>& g,
                                            const std::vector<std::size_t>& rows, std::size_t col) {
    const std::size_t n = p.dim();
    const std::size_t m = g.size();
    if (m == 0 || m >= n) throw Error(ErrorCode::DimensionMismatch, "need 1 <= m <= n-1 map components");
    if (rows.size() != m) throw Error(ErrorCode::DimensionMismatch, "need one row index per map component");
    if (col >= n) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
    for (auto r : rows)
        if (r >= n) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
    for (const auto& ga : g)
        if (ga.dim() != n) throw Error(ErrorCode::DimensionMismatch, "map components must live on C^n");
    if (!has_generic_full_rank(g, n)) throw Error(ErrorCode::SingularMap, "Jacobian of G has generic rank below m");

    const BetaDecomposition decomposition = p_beta_decompose(p);

    Matrix<HoloPoly> jac(m, m, HoloPoly::zero(n));
    std::vector<HoloPoly> g_col;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) jac(a, b) = g[a].derivative(rows[b]);
        g_col.push_back(g[a].derivative(col));
    }
    const HoloPoly jac_det = determinant(jac);

    DeterminantCheck out;
    for (const auto& [beta, part] : decomposition.parts) {
        ++out.checked;
        const HoloPoly lhs = jac_det * part.derivative(col);
        HoloPoly rhs = HoloPoly::zero(n);
        for (std::size_t j = 0; j < m; ++j) {
            if (g_col[j].is_zero()) continue;
            Matrix<HoloPoly> replaced = jac;
            for (std::size_t b = 0; b < m; ++b) replaced(j, b) = part.derivative(rows[b]);
            rhs += determinant(replaced) * g_col[j];
        }
        if (!(lhs == rhs)) {
            out.passed = false;
            out.failures.push_back(beta);
        }
    }
    return out;
}

}  // namespace hermpsh
