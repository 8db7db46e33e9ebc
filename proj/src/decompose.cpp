#include "hermpsh/decompose.hpp"

#include <numeric>
#include <string>

#include "hermpsh/profile.hpp"

namespace hermpsh {

namespace {

unsigned positive_homogeneous_degree(const HoloPoly& f, const char* name) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, std::string(name) + " is zero");
    const auto deg = f.homogeneous_degree();
    if (!deg || *deg == 0) throw Error(ErrorCode::NotHomogeneous, std::string(name) + " must be homogeneous of positive degree");
    return *deg;
}

[[noreturn]] void not_decomposable(const std::string& why) { throw Error(ErrorCode::NotDecomposable, why); }
[[noreturn]] void hypothesis(const std::string& why) { throw Error(ErrorCode::HypothesisViolation, why); }

std::string beta_text(const MultiIndex& beta) {
    std::string s = "(";
    for (std::size_t j = 0; j < beta.dim(); ++j) s += (j ? "," : "") + std::to_string(beta[j]);
    return s + ")";
}

}  // namespace

Proportionality power_proportionality_check(const HoloPoly& f, const HoloPoly& g) {
    const unsigned deg_f = positive_homogeneous_degree(f, "f");
    const unsigned deg_g = positive_homogeneous_degree(g, "g");
    if (f.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "f and g live in different dimensions");
    for (std::size_t l = 0; l < f.dim(); ++l) {
        const HoloPoly lhs = GaussianRational(deg_g) * (g * f.derivative(l));
        const HoloPoly rhs = GaussianRational(deg_f) * (f * g.derivative(l));
        if (!(lhs == rhs)) return {};
    }
    PerfectPower pp = perfect_power_base(g);
    if ((pp.power * deg_f) % deg_g != 0) return {};
    const unsigned exponent = pp.power * deg_f / deg_g;
    const HoloPoly power = pp.base.pow(exponent);
    const GaussianRational factor = f.leading().second / power.leading().second;
    if (!(f == factor * power)) return {};
    return {true, factor, exponent, std::move(pp.base)};
}

HoloPoly base_from_part(const HermPoly& p, const MultiIndex& beta) {
    const BetaDecomposition dec = p_beta_decompose(p);
    auto it = dec.parts.find(beta);
    if (it == dec.parts.end()) throw Error(ErrorCode::InvalidArgument, "P_beta is zero at beta " + beta_text(beta));
    return perfect_power_base(it->second).base;
}

SingleDecomposition decompose_single(const HermPoly& p) {
    const BetaDecomposition dec = p_beta_decompose(p);
    const unsigned total = dec.total_degree;

    // Minimal deg P_beta means maximal |beta|; parts are sorted descending, so
    // the last entry of the leading order block is the graded-lex smallest.
    const MultiIndex* chosen = nullptr;
    const unsigned top_order = dec.parts.begin()->first.order();
    for (const auto& [beta, part] : dec.parts) {
        if (beta.order() != top_order) break;
        chosen = &beta;
    }
    const HoloPoly h = perfect_power_base(dec.parts.at(*chosen)).base;
    const unsigned deg_h = h.degree();
    if (total % deg_h != 0) not_decomposable("deg h does not divide the total degree");
    const unsigned levels = total / deg_h;

    std::vector<HoloPoly> h_pow{HoloPoly::one(p.dim())};
    auto power_of_h = [&](unsigned e) -> const HoloPoly& {
        while (h_pow.size() <= e) h_pow.push_back(h_pow.back() * h);
        return h_pow[e];
    };

    std::map<MultiIndex, GaussianRational, std::greater<>> c_beta;
    for (const auto& [beta, part] : dec.parts) {
        const unsigned holo_degree = total - beta.order();
        if (holo_degree % deg_h != 0) not_decomposable("deg h does not divide deg P_beta at beta " + beta_text(beta));
        const HoloPoly& hp = power_of_h(holo_degree / deg_h);
        const GaussianRational c = part.leading().second / hp.leading().second;
        if (!(part == c * hp)) not_decomposable("P_beta is not a constant multiple of a power of h at beta " + beta_text(beta));
        c_beta.emplace(beta, c);
    }

    MixedPoly s(1);
    for (unsigned l = 1; l < levels; ++l) {
        const HoloPoly& hl = power_of_h(l);
        const auto& [alpha_l, gamma_l] = *hl.terms().rbegin();
        auto it = c_beta.find(alpha_l);
        if (it == c_beta.end()) continue;
        s.add_term({MultiIndex{levels - l}, MultiIndex{l}}, it->second / gamma_l.conj());
    }

    SingleDecomposition out{HermPoly(1), h, false};
    try {
        out.s = HermPoly(std::move(s));
    } catch (const Error&) {
        not_decomposable("assembled s is not real-valued");
    }
    const std::vector<HoloPoly> map{h};
    if (!(compose_holo(out.s, map) == p)) not_decomposable("s(h(z)) does not reproduce P");
    out.verified = true;
    return out;
}

std::vector<HoloPoly> SeparateDecomposition::coordinate_change(std::size_t dim) const {
    std::vector<HoloPoly> phi = identity_map(dim);
    for (std::size_t j = 0; j < block.size; ++j)
        phi[j] = HoloPoly::monomial(MultiIndex::unit(dim, j, block.exponent_divisor()));
    return phi;
}

std::vector<HoloPoly> SeparateDecomposition::monomial_map(std::size_t dim) const {
    MultiIndex mu(dim);
    for (std::size_t j = 0; j < block.size; ++j) mu[j] = block.half_degrees[j] / block.block_gcd;
    std::vector<HoloPoly> out;
    for (std::size_t s = block.size; s < dim; ++s) out.push_back(HoloPoly::monomial(mu + MultiIndex::unit(dim, s)));
    return out;
}

HoloPoly strip_block_monomial(const HoloPoly& part, const MultiIndex& beta, const BlockParameters& block) {
    const std::size_t n = part.dim();
    const std::size_t l = block.size;
    HoloPoly q(n - l);
    for (const auto& [alpha, c] : part) {
        for (std::size_t j = 0; j < l; ++j)
            if (alpha[j] + beta[j] != 2 * block.half_degrees[j])
                hypothesis("variable " + std::to_string(j + 1) + " is not separately homogeneous at beta " + beta_text(beta));
        q.add_term(alpha.slice(l, n - l), c);
    }
    return q;
}

SeparateDecomposition decompose_separate(const HermPoly& p, std::size_t block_size) {
    const std::size_t n = p.dim();
    if (block_size == 0 || block_size >= n) hypothesis("block size must satisfy 1 <= l <= n-1");
    if (has_pluriharmonic_terms(p)) hypothesis("P has pluriharmonic terms");
    const HomogeneityProfile prof = profile(p);
    if (!prof.total_degree) hypothesis("P is not homogeneous");

    SeparateDecomposition out;
    try {
        out.block = prof.block(block_size);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateCodimension) throw;
        hypothesis(e.what());
    }
    const BlockParameters& block = out.block;
    const std::size_t m = n - block_size;
    const long codim = block.codimension_degree();
    const long d = block.block_gcd;

    const BetaDecomposition dec = p_beta_decompose(p);
    MixedPoly double_sum(m);
    for (const auto& [beta, part] : dec.parts) {
        const HoloPoly q_beta = strip_block_monomial(part, beta, block);
        const MultiIndex tail = beta.slice(block_size, m);
        const long m_beta = 2L * block.half_total - 2L * block.block_sum - static_cast<long>(tail.order());
        if (m_beta <= 0 || (d * m_beta) % codim != 0 || d * m_beta / codim >= 2 * d)
            hypothesis("d M_beta / (k-D) is not in {1, ..., 2d-1} at beta " + beta_text(beta));
        for (std::size_t nu = 0; nu < block_size; ++nu) {
            const long lhs = codim * (2L * block.half_degrees[nu] - beta[nu]);
            if (lhs != static_cast<long>(block.half_degrees[nu]) * m_beta)
                hypothesis("(k-D)(2d_nu - beta_nu) != d_nu M_beta at beta " + beta_text(beta));
        }
        out.m_beta.emplace(beta, static_cast<unsigned>(m_beta));
        for (const auto& [alpha, c] : q_beta) double_sum.add_term({alpha, tail}, c);
    }

    std::vector<HoloPoly> substitution;
    for (std::size_t j = 0; j < block_size; ++j) substitution.push_back(HoloPoly::one(m));
    for (std::size_t s = 0; s < m; ++s) substitution.push_back(HoloPoly::variable(m, s));
    const HermPoly q_substituted = compose_holo(p, substitution);
    if (!(double_sum == q_substituted.mixed())) hypothesis("the two constructions of Q disagree");
    out.q = q_substituted;

    const auto phi = out.coordinate_change(n);
    const auto mono = out.monomial_map(n);
    if (!(compose_holo(p, phi) == compose_holo(out.q, mono)))
        hypothesis("P o Phi differs from Q composed with the monomial map");

    const unsigned divisor = block.exponent_divisor();
    for (const auto& [mono_q, c] : out.q.terms())
        if (mono_q.holo.order() % divisor != 0 || mono_q.anti.order() % divisor != 0)
            hypothesis("a term of Q has degree not divisible by (k-D)/d");
    out.verified = true;
    return out;
}

HoloPoly monomial_of(const std::vector<unsigned>& exponents) {
    return HoloPoly::monomial(MultiIndex(std::vector<std::uint32_t>(exponents.begin(), exponents.end())));
}

FullDecomposition decompose_full(const HermPoly& p) {
    const std::size_t n = p.dim();
    if (has_pluriharmonic_terms(p)) hypothesis("P has pluriharmonic terms");
    const HomogeneityProfile prof = profile(p);
    if (!prof.total_degree) hypothesis("P is not homogeneous");
    std::vector<unsigned> half(n);
    unsigned d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto dj = prof.half_degree(j);
        if (!dj) hypothesis("P is not separately homogeneous of positive even degree in variable " + std::to_string(j + 1));
        half[j] = *dj;
        d = std::gcd(d, *dj);
    }
    FullDecomposition out{HermPoly(1), {}, false};
    for (std::size_t j = 0; j < n; ++j) out.exponents.push_back(half[j] / d);

    MixedPoly s(1);
    for (const auto& [mono, c] : p.terms()) {
        if ((mono.holo[0] * d) % half[0] != 0 || (mono.anti[0] * d) % half[0] != 0)
            hypothesis("support term is not a power of the monomial");
        const unsigned pw = mono.holo[0] * d / half[0];
        const unsigned qw = mono.anti[0] * d / half[0];
        for (std::size_t j = 0; j < n; ++j)
            if (mono.holo[j] != pw * out.exponents[j] || mono.anti[j] != qw * out.exponents[j])
                hypothesis("support term is not a power of the monomial");
        s.add_term({MultiIndex{pw}, MultiIndex{qw}}, c);
    }
    out.s = HermPoly(std::move(s));
    const std::vector<HoloPoly> map{monomial_of(out.exponents)};
    if (!(compose_holo(out.s, map) == p)) hypothesis("s(z^e) does not reproduce P");
    out.verified = true;
    return out;
}

}  // namespace hermpsh
