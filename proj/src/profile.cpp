#include "hermpsh/profile.hpp"

#include <numeric>

namespace hermpsh {

std::optional<unsigned> HomogeneityProfile::half_total() const {
    if (!total_degree || *total_degree % 2 != 0) return std::nullopt;
    return *total_degree / 2;
}

std::optional<unsigned> HomogeneityProfile::half_degree(std::size_t j) const {
    const auto& s = separate_degree.at(j);
    if (!s || *s == 0 || *s % 2 != 0) return std::nullopt;
    return *s / 2;
}

std::vector<std::size_t> HomogeneityProfile::separate_variables() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < dim; ++j)
        if (is_separately_homogeneous(j)) out.push_back(j);
    return out;
}

BlockParameters HomogeneityProfile::block(std::size_t l) const {
    if (l == 0 || l >= dim)
        throw Error(ErrorCode::ProfileIncomplete, "block size must satisfy 1 <= l <= n-1");
    const auto k = half_total();
    if (!k) throw Error(ErrorCode::ProfileIncomplete, "total degree is undefined or odd");
    BlockParameters b;
    b.size = l;
    b.half_total = *k;
    b.block_gcd = *k;
    for (std::size_t j = 0; j < l; ++j) {
        const auto dj = half_degree(j);
        if (!dj)
            throw Error(ErrorCode::ProfileIncomplete,
                        "variable " + std::to_string(j + 1) + " is not separately homogeneous of positive even degree");
        b.half_degrees.push_back(*dj);
        b.block_sum += *dj;
        b.block_gcd = std::gcd(b.block_gcd, *dj);
    }
    if (b.block_sum >= b.half_total)
        throw Error(ErrorCode::DegenerateCodimension, "k - D must be positive");
    return b;
}

HomogeneityProfile profile(const HermPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "profile of the zero polynomial");
    HomogeneityProfile out;
    out.dim = p.dim();
    const auto& first = p.terms().begin()->first;
    out.total_degree = first.order();
    out.separate_degree.resize(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) out.separate_degree[j] = first.holo[j] + first.anti[j];
    for (const auto& [m, c] : p.terms()) {
        if (out.total_degree && m.order() != *out.total_degree) out.total_degree.reset();
        for (std::size_t j = 0; j < p.dim(); ++j) {
            auto& s = out.separate_degree[j];
            if (s && m.holo[j] + m.anti[j] != *s) s.reset();
        }
    }
    return out;
}

}  // namespace hermpsh
