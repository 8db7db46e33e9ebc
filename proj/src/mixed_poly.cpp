#include "hermpsh/mixed_poly.hpp"

#include <algorithm>
#include <map>

namespace hermpsh {

MixedPoly MixedPoly::constant(std::size_t dim, const GaussianRational& c) {
    MixedPoly p(dim);
    p.add_term({MultiIndex(dim), MultiIndex(dim)}, c);
    return p;
}

MixedPoly MixedPoly::monomial(const MultiIndex& alpha, const MultiIndex& beta, const GaussianRational& c) {
    if (alpha.dim() != beta.dim()) throw Error(ErrorCode::DimensionMismatch, "alpha and beta lengths differ");
    MixedPoly p(alpha.dim());
    p.add_term({alpha, beta}, c);
    return p;
}

MixedPoly MixedPoly::from_holo(const HoloPoly& f) {
    MixedPoly p(f.dim());
    for (const auto& [alpha, c] : f) p.terms_.emplace(BiIndex{alpha, MultiIndex(f.dim())}, c);
    return p;
}

MixedPoly MixedPoly::conj_of_holo(const HoloPoly& f) {
    MixedPoly p(f.dim());
    for (const auto& [alpha, c] : f) p.terms_.emplace(BiIndex{MultiIndex(f.dim()), alpha}, c.conj());
    return p;
}

MixedPoly MixedPoly::conj() const {
    MixedPoly out(dim_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.swapped(), c.conj());
    return out;
}

bool MixedPoly::is_hermitian() const {
    for (const auto& [m, c] : terms_) {
        auto it = terms_.find(m.swapped());
        if (it == terms_.end() || !(it->second == c.conj())) return false;
    }
    return true;
}

MixedPoly MixedPoly::d_holo(std::size_t j) const {
    MixedPoly out(dim_);
    for (const auto& [m, c] : terms_) {
        if (m.holo[j] == 0) continue;
        BiIndex lowered = m;
        lowered.holo[j] -= 1;
        out.add_term(lowered, c * GaussianRational(m.holo[j]));
    }
    return out;
}

MixedPoly MixedPoly::d_anti(std::size_t j) const {
    MixedPoly out(dim_);
    for (const auto& [m, c] : terms_) {
        if (m.anti[j] == 0) continue;
        BiIndex lowered = m;
        lowered.anti[j] -= 1;
        out.add_term(lowered, c * GaussianRational(m.anti[j]));
    }
    return out;
}

MixedPoly MixedPoly::compose_holo(std::span<const HoloPoly> map) const {
    if (map.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "map must have one component per variable");
    const std::size_t target = map.empty() ? 0 : map.front().dim();
    for (const auto& g : map)
        if (g.dim() != target) throw Error(ErrorCode::DimensionMismatch, "map components differ in source dimension");

    std::vector<std::vector<HoloPoly>> powers(dim_);
    for (std::size_t j = 0; j < dim_; ++j) powers[j].push_back(HoloPoly::one(target));
    std::map<MultiIndex, HoloPoly> cache;
    auto image = [&](const MultiIndex& alpha) -> const HoloPoly& {
        auto it = cache.find(alpha);
        if (it != cache.end()) return it->second;
        HoloPoly value = HoloPoly::one(target);
        for (std::size_t j = 0; j < dim_; ++j) {
            while (powers[j].size() <= alpha[j]) powers[j].push_back(powers[j].back() * map[j]);
            if (alpha[j] > 0) value = value * powers[j][alpha[j]];
        }
        return cache.emplace(alpha, std::move(value)).first->second;
    };

    MixedPoly out(target);
    for (const auto& [m, a] : terms_) {
        const HoloPoly& holo = image(m.holo);
        const HoloPoly& anti = image(m.anti);
        for (const auto& [gamma, c1] : holo) {
            const GaussianRational ac1 = a * c1;
            for (const auto& [delta, c2] : anti) out.add_term({gamma, delta}, ac1 * c2.conj());
        }
    }
    return out;
}

std::complex<double> MixedPoly::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from polynomial");
    std::vector<unsigned> max_exp(dim_, 0);
    for (const auto& [m, c] : terms_)
        for (std::size_t j = 0; j < dim_; ++j) max_exp[j] = std::max({max_exp[j], m.holo[j], m.anti[j]});
    std::vector<std::vector<std::complex<double>>> zp(dim_), zbp(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        zp[j].assign(1, 1.0);
        zbp[j].assign(1, 1.0);
        for (unsigned e = 1; e <= max_exp[j]; ++e) {
            zp[j].push_back(zp[j].back() * point[j]);
            zbp[j].push_back(zbp[j].back() * std::conj(point[j]));
        }
    }
    std::complex<double> sum = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t j = 0; j < dim_; ++j) t *= zp[j][m.holo[j]] * zbp[j][m.anti[j]];
        sum += t;
    }
    return sum;
}

GaussianRational MixedPoly::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from polynomial");
    GaussianRational sum;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (m.holo[j]) t *= point[j].pow(m.holo[j]);
            if (m.anti[j]) t *= point[j].conj().pow(m.anti[j]);
        }
        sum += t;
    }
    return sum;
}

}  // namespace hermpsh
