#include "hermpsh/herm_poly.hpp"

#include <cmath>

namespace hermpsh {

HermPoly::HermPoly(MixedPoly p) : poly_(std::move(p)) {
    if (!poly_.is_hermitian())
        throw Error(ErrorCode::SymmetryViolation, "coefficient at (beta, alpha) is not the conjugate of (alpha, beta)");
}

HermPoly& HermPoly::operator+=(const HermPoly& rhs) {
    poly_ += rhs.poly_;
    return *this;
}

HermPoly& HermPoly::operator-=(const HermPoly& rhs) {
    poly_ -= rhs.poly_;
    return *this;
}

HermPoly operator*(const HermPoly& a, const HermPoly& b) {
    HermPoly out(a.dim());
    out.poly_ = a.poly_ * b.poly_;
    return out;
}

HermPoly operator*(const mpq_class& s, const HermPoly& a) {
    HermPoly out(a);
    out.poly_ *= GaussianRational(s);
    return out;
}

HermPoly HermPoly::operator-() const {
    HermPoly out(dim());
    out.poly_ = -poly_;
    return out;
}

HermPoly HermPoly::squared_modulus(const HoloPoly& f) {
    HermPoly out(f.dim());
    out.poly_ = MixedPoly::from_holo(f) * MixedPoly::conj_of_holo(f);
    return out;
}

HermPoly herm_from_terms(std::size_t dim, std::span<const HermPoly::Entry> entries) {
    MixedPoly p(dim);
    for (const auto& [m, c] : entries) {
        if (m.holo.dim() != dim || m.anti.dim() != dim)
            throw Error(ErrorCode::DimensionMismatch, "multi-index length differs from dimension");
        p.add_term(m, c);
    }
    return HermPoly(std::move(p));
}

double evaluate(const HermPoly& p, std::span<const std::complex<double>> point) {
    return p.mixed().evaluate(point).real();
}

HermPoly compose_holo(const HermPoly& p, std::span<const HoloPoly> map) {
    return HermPoly(p.mixed().compose_holo(map));
}

PluriharmonicSplit strip_pluriharmonic(const HermPoly& p) {
    MixedPoly core(p.dim()), ph(p.dim());
    for (const auto& [m, c] : p.terms()) {
        if (m.holo.is_zero() || m.anti.is_zero()) {
            ph.add_term(m, c);
        } else {
            core.add_term(m, c);
        }
    }
    return {HermPoly(std::move(core)), HermPoly(std::move(ph))};
}

bool has_pluriharmonic_terms(const HermPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (m.holo.is_zero() || m.anti.is_zero()) return true;
    return false;
}

}  // namespace hermpsh
