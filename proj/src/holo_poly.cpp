#include "hermpsh/holo_poly.hpp"

#include <algorithm>

namespace hermpsh {

namespace {

// powers[j][e] = x_j^e, built lazily up to the largest exponent in use.
template <class Scalar, class Poly>
std::vector<std::vector<Scalar>> power_table(const Poly& p, std::span<const Scalar> point, const Scalar& one) {
    std::vector<unsigned> max_exp(p.dim(), 0);
    for (const auto& [alpha, c] : p)
        for (std::size_t j = 0; j < p.dim(); ++j) max_exp[j] = std::max(max_exp[j], alpha[j]);
    std::vector<std::vector<Scalar>> powers(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) {
        powers[j].reserve(max_exp[j] + 1);
        powers[j].push_back(one);
        for (unsigned e = 1; e <= max_exp[j]; ++e) powers[j].push_back(powers[j].back() * point[j]);
    }
    return powers;
}

}  // namespace

HoloPoly HoloPoly::constant(std::size_t dim, const GaussianRational& c) {
    HoloPoly p(dim);
    p.add_term(MultiIndex(dim), c);
    return p;
}

HoloPoly HoloPoly::variable(std::size_t dim, std::size_t j) {
    return monomial(MultiIndex::unit(dim, j));
}

HoloPoly HoloPoly::monomial(const MultiIndex& alpha, const GaussianRational& c) {
    HoloPoly p(alpha.dim());
    p.add_term(alpha, c);
    return p;
}

unsigned HoloPoly::degree() const noexcept {
    return terms_.empty() ? 0 : terms_.begin()->first.order();
}

std::optional<unsigned> HoloPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const unsigned d = terms_.begin()->first.order();
    if (terms_.rbegin()->first.order() != d) return std::nullopt;
    return d;
}

bool HoloPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

HoloPoly HoloPoly::derivative(std::size_t j) const {
    HoloPoly out(dim_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[j] == 0) continue;
        MultiIndex lowered = alpha;
        lowered[j] -= 1;
        out.add_term(lowered, c * GaussianRational(alpha[j]));
    }
    return out;
}

HoloPoly HoloPoly::conj_coefficients() const {
    HoloPoly out(*this);
    for (auto& [alpha, c] : out.terms_) c = c.conj();
    return out;
}

HoloPoly HoloPoly::monic() const {
    if (terms_.empty()) return *this;
    const GaussianRational lc = terms_.begin()->second;
    HoloPoly out(*this);
    for (auto& [alpha, c] : out.terms_) c /= lc;
    return out;
}

HoloPoly HoloPoly::substitute(std::span<const HoloPoly> map) const {
    if (map.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "substitution needs one polynomial per variable");
    const std::size_t target = map.empty() ? 0 : map.front().dim();
    for (const auto& g : map)
        if (g.dim() != target) throw Error(ErrorCode::DimensionMismatch, "substitution components differ in dimension");
    std::vector<std::vector<HoloPoly>> powers(dim_);
    for (std::size_t j = 0; j < dim_; ++j) powers[j].push_back(HoloPoly::one(target));
    HoloPoly out(target);
    for (const auto& [alpha, c] : terms_) {
        HoloPoly term = HoloPoly::constant(target, c);
        for (std::size_t j = 0; j < dim_; ++j) {
            while (powers[j].size() <= alpha[j]) powers[j].push_back(powers[j].back() * map[j]);
            if (alpha[j] > 0) term = term * powers[j][alpha[j]];
        }
        out += term;
    }
    return out;
}

std::complex<double> HoloPoly::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from polynomial");
    const auto powers = power_table<std::complex<double>>(*this, point, {1.0, 0.0});
    std::complex<double> sum = 0;
    for (const auto& [alpha, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t j = 0; j < dim_; ++j) t *= powers[j][alpha[j]];
        sum += t;
    }
    return sum;
}

GaussianRational HoloPoly::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from polynomial");
    const auto powers = power_table<GaussianRational>(*this, point, GaussianRational(1));
    GaussianRational sum;
    for (const auto& [alpha, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t j = 0; j < dim_; ++j) t *= powers[j][alpha[j]];
        sum += t;
    }
    return sum;
}

std::optional<HoloPoly> divide_exact(const HoloPoly& a, const HoloPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "polynomial dimensions differ");
    const auto& [lead_mono, lead_coef] = b.leading();
    HoloPoly quotient(a.dim());
    HoloPoly rem = a;
    while (!rem.is_zero()) {
        const auto& [m, c] = rem.leading();
        if (!lead_mono.divides(m)) return std::nullopt;
        HoloPoly t = HoloPoly::monomial(m - lead_mono, c / lead_coef);
        rem -= t * b;
        quotient += t;
    }
    return quotient;
}

std::vector<HoloPoly> identity_map(std::size_t dim) {
    std::vector<HoloPoly> out;
    out.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) out.push_back(HoloPoly::variable(dim, j));
    return out;
}

}  // namespace hermpsh
