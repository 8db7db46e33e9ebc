#include "hermpsh/format.hpp"

#include "hermpsh/parser.hpp"

namespace hermpsh {

namespace {

void append_power(std::string& out, const std::string& base, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += base;
    if (e > 1) out += '^' + std::to_string(e);
}

std::string monomial_text(const BiIndex& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t j = 0; j < m.dim(); ++j) append_power(out, names[j], m.holo[j]);
    for (std::size_t j = 0; j < m.dim(); ++j) append_power(out, "conj(" + names[j] + ")", m.anti[j]);
    return out;
}

// Coefficient text with the sign split off.
std::pair<bool, std::string> coefficient_text(const GaussianRational& c, bool has_monomial) {
    if (c.is_real()) {
        const bool negative = sgn(c.re()) < 0;
        const mpq_class mag = abs(c.re());
        if (mag == 1 && has_monomial) return {negative, ""};
        return {negative, mag.get_str()};
    }
    if (sgn(c.re()) == 0) {
        const bool negative = sgn(c.im()) < 0;
        const mpq_class mag = abs(c.im());
        return {negative, mag == 1 ? "i" : mag.get_str() + "*i"};
    }
    return {false, "(" + c.str() + ")"};
}

std::string render(const MixedPoly& p, const std::vector<std::string>& variables) {
    if (p.is_zero()) return "0";
    const std::vector<std::string> names = variables.empty() ? default_variables(p.dim()) : variables;
    if (names.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "need one variable name per dimension");
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p) {
        const std::string mono = monomial_text(m, names);
        const auto [negative, coef] = coefficient_text(c, !mono.empty());
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        out += coef;
        if (!coef.empty() && !mono.empty()) out += '*';
        out += mono;
        first = false;
    }
    return out;
}

}  // namespace

std::string format_poly(const HermPoly& p, const std::vector<std::string>& variables) {
    return render(p.mixed(), variables);
}

std::string format_poly(const MixedPoly& p, const std::vector<std::string>& variables) { return render(p, variables); }

std::string format_poly(const HoloPoly& p, const std::vector<std::string>& variables) {
    return render(MixedPoly::from_holo(p), variables);
}

}  // namespace hermpsh
