#include "hermpsh/counterexample.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "hermpsh/decompose.hpp"
#include "hermpsh/format.hpp"
#include "hermpsh/levi.hpp"
#include "hermpsh/profile.hpp"

namespace hermpsh {

CounterexampleFixture counterexample_fixture() {
    const std::size_t n = 3;
    const HoloPoly z = HoloPoly::variable(n, 0);
    const HoloPoly w1 = HoloPoly::variable(n, 1);
    const HoloPoly w2 = HoloPoly::variable(n, 2);
    const HermPoly inner = HermPoly::squared_modulus(w1 * w1) + HermPoly::squared_modulus(w1 * w1 - w1 * w2) +
                           HermPoly::squared_modulus(w2 * w2);
    CounterexampleFixture f;
    f.p = HermPoly::squared_modulus(z) * inner;
    f.g = {z * w1 * w1, z * w2 * w2};
    f.variables = {"z", "w1", "w2"};
    return f;
}

namespace {

std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(6) << x;
    return os.str();
}

}  // namespace

CounterexampleReport verify_counterexample(const CounterexampleFixture& fixture, const CounterexampleOptions& options) {
    const HermPoly& p = fixture.p;
    const auto& vars = fixture.variables;
    CounterexampleReport report;

    const PshVerdict psh = psh_sample_test(p, options.samples, options.seed, options.tol);
    report.checks.push_back({"psh_sampling", psh.passed,
                             "samples=" + std::to_string(psh.samples) + " seed=" + std::to_string(psh.seed) +
                                 " min_eigenvalue=" + sci(psh.min_eigenvalue)});

    try {
        const DiagonalCheck diag = diagonal_nonneg_check(p);
        std::ostringstream detail;
        if (diag.passed) {
            detail << "all diagonal coefficients real and nonnegative";
        } else {
            detail << "negative or non-real diagonal coefficient at alpha=" << *diag.offending;
        }
        report.checks.push_back({"diagonal_nonnegative", diag.passed, detail.str()});
    } catch (const Error& e) {
        report.checks.push_back({"diagonal_nonnegative", false, e.what()});
    }

    const HomogeneityProfile prof = profile(p);
    try {
        const FoliationMap fol = build_foliation_map(prof, 1);
        const bool same_map = fol.components == fixture.g;
        const bool kernel = fields_in_jacobian_kernel(fol);
        const NullDirectionCheck null = verify_levi_null_directions(p, fol);
        std::string detail = "G=(";
        for (std::size_t a = 0; a < fol.components.size(); ++a)
            detail += (a ? ", " : "") + format_poly(fol.components[a], vars);
        detail += ") matches_fixture=" + std::string(same_map ? "yes" : "no");
        detail += " jacobian_kernel=" + std::string(kernel ? "yes" : "no");
        detail += " levi_residual_zero=" + std::string(null.passed ? "yes" : "no");
        report.checks.push_back({"levi_null_directions", same_map && kernel && null.passed, detail});
    } catch (const Error& e) {
        report.checks.push_back({"levi_null_directions", false, e.what()});
    }

    const auto separate = prof.separate_variables();
    {
        std::string detail = "separately homogeneous in {";
        for (std::size_t i = 0; i < separate.size(); ++i) {
            const std::size_t j = separate[i];
            detail += (i ? ", " : "") + vars.at(j) + ": d=" + std::to_string(*prof.half_degree(j));
        }
        detail += "}";
        const bool only_first = separate.size() == 1 && separate.front() == 0;
        report.checks.push_back({"separate_homogeneity", only_first, detail});
    }

    try {
        const BetaDecomposition dec = p_beta_decompose(p);
        std::optional<BlockParameters> block;
        try {
            block = prof.block(1);
        } catch (const Error&) {
        }
        for (const auto& [beta, part] : dec.parts)
            report.obstruction_parts.push_back(block ? strip_block_monomial(part, beta, *block) : part);
        const std::vector<std::string> names = block ? std::vector<std::string>(vars.begin() + 1, vars.end()) : vars;
        report.span_dimension = span_dimension(report.obstruction_parts);
        std::string detail = "span{";
        for (std::size_t i = 0; i < report.obstruction_parts.size(); ++i)
            detail += (i ? ", " : "") + format_poly(report.obstruction_parts[i], names);
        detail += "} has dimension " + std::to_string(report.span_dimension) + ", map has " +
                  std::to_string(fixture.g.size()) + " components";
        report.checks.push_back({"span_obstruction", report.span_dimension > fixture.g.size(), detail});
    } catch (const Error& e) {
        report.checks.push_back({"span_obstruction", false, e.what()});
    }

    report.confirmed = true;
    for (const auto& c : report.checks) report.confirmed = report.confirmed && c.passed;
    return report;
}

CounterexampleReport verify_counterexample(const CounterexampleOptions& options) {
    return verify_counterexample(counterexample_fixture(), options);
}

}  // namespace hermpsh
