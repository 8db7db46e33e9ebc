#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "hermpsh/holo_poly.hpp"
#include "hermpsh/mixed_poly.hpp"

namespace hermpsh {

/// Real-valued polynomial sum a_{alpha,beta} z^alpha zbar^beta with
/// conj(a_{alpha,beta}) == a_{beta,alpha}. The symmetry is checked on every
/// construction path.
class HermPoly {
public:
    using TermMap = MixedPoly::TermMap;
    using Entry = std::pair<BiIndex, GaussianRational>;

    explicit HermPoly(std::size_t dim = 0) : poly_(dim) {}
    /// Throws SymmetryViolation if p is not Hermitian.
    explicit HermPoly(MixedPoly p);

    std::size_t dim() const noexcept { return poly_.dim(); }
    const MixedPoly& mixed() const noexcept { return poly_; }
    const TermMap& terms() const noexcept { return poly_.terms(); }
    std::size_t size() const noexcept { return poly_.size(); }
    bool is_zero() const noexcept { return poly_.is_zero(); }
    GaussianRational coefficient(const MultiIndex& alpha, const MultiIndex& beta) const {
        return poly_.coefficient({alpha, beta});
    }

    HermPoly& operator+=(const HermPoly& rhs);
    HermPoly& operator-=(const HermPoly& rhs);
    friend HermPoly operator+(HermPoly a, const HermPoly& b) { return a += b; }
    friend HermPoly operator-(HermPoly a, const HermPoly& b) { return a -= b; }
    friend HermPoly operator*(const HermPoly& a, const HermPoly& b);
    friend HermPoly operator*(const mpq_class& s, const HermPoly& a);
    HermPoly operator-() const;

    friend bool operator==(const HermPoly& a, const HermPoly& b) { return a.poly_ == b.poly_; }

    /// |f|^2 = f * conj(f).
    static HermPoly squared_modulus(const HoloPoly& f);

private:
    MixedPoly poly_;
};

/// Sums duplicate keys, drops zeros, then checks Hermitian symmetry.
HermPoly herm_from_terms(std::size_t dim, std::span<const HermPoly::Entry> entries);

/// Real part of P(p); the imaginary part vanishes up to rounding.
double evaluate(const HermPoly& p, std::span<const std::complex<double>> point);

/// Exact expansion of P(Phi(w)).
HermPoly compose_holo(const HermPoly& p, std::span<const HoloPoly> map);

struct PluriharmonicSplit {
    HermPoly core;        // terms with |alpha| > 0 and |beta| > 0
    HermPoly pluriharmonic;  // terms with |alpha| == 0 or |beta| == 0
};

PluriharmonicSplit strip_pluriharmonic(const HermPoly& p);
bool has_pluriharmonic_terms(const HermPoly& p);

}  // namespace hermpsh
