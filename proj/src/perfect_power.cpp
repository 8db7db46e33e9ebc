#include "hermpsh/perfect_power.hpp"

namespace hermpsh {

std::optional<HoloPoly> monic_root(const HoloPoly& monic_g, unsigned m) {
    if (monic_g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root of the zero polynomial");
    if (m == 1) return monic_g;
    const auto& [lead, lc] = monic_g.leading();
    if (!lc.is_one()) throw Error(ErrorCode::InvalidArgument, "monic_root expects a monic polynomial");
    // Both extreme monomials of an m-th power are m-th powers of monomials.
    if (!lead.all_divisible_by(m) || !monic_g.terms().rbegin()->first.all_divisible_by(m)) return std::nullopt;

    // Terms of the root are fixed one at a time in descending order: the
    // leading term of g - r^m equals m * lead(r)^(m-1) * (next term of r).
    const MultiIndex root_lead = lead.divided(m);
    const MultiIndex shift = root_lead.scaled(m - 1);
    const GaussianRational inv_m = GaussianRational(mpq_class(1, m));
    HoloPoly root = HoloPoly::monomial(root_lead);
    MultiIndex last = root_lead;
    while (true) {
        HoloPoly rem = monic_g - root.pow(m);
        if (rem.is_zero()) return root;
        const auto& [nu, c] = rem.leading();
        if (!shift.divides(nu)) return std::nullopt;
        MultiIndex next = nu - shift;
        if (!(next < last)) return std::nullopt;
        root.add_term(next, c * inv_m);
        last = std::move(next);
    }
}

PerfectPower perfect_power_base(const HoloPoly& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "perfect power of the zero polynomial");
    const auto deg = g.homogeneous_degree();
    if (!deg) throw Error(ErrorCode::NotHomogeneous, "perfect power base needs a homogeneous polynomial");
    if (*deg == 0) throw Error(ErrorCode::InvalidArgument, "perfect power base needs positive degree");
    const GaussianRational unit = g.leading().second;
    const HoloPoly monic = g.monic();
    for (unsigned m = *deg; m >= 1; --m) {
        if (*deg % m != 0) continue;
        if (auto root = monic_root(monic, m)) return {std::move(*root), m, unit};
    }
    return {monic, 1, unit};  // unreachable: m == 1 always succeeds
}

}  // namespace hermpsh
