// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "hermpsh/counterexample.hpp"
#include "hermpsh/decompose.hpp"
#include "hermpsh/foliation.hpp"
#include "hermpsh/format.hpp"
#include "hermpsh/linear_algebra.hpp"
#include "hermpsh/parser.hpp"

using namespace hermpsh;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

const std::vector<std::string> kXyz{"z", "w1", "w2"};
const char* const kCounterexample = "|z|^2*(|w1|^4+|w1^2-w1*w2|^2+|w2|^4)";

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == m) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Outcome counterexample_confirmation() {
    const CounterexampleReport r = verify_counterexample(CounterexampleOptions{200, 42, 1e-9});
    Outcome o;
    std::ostringstream d;
    for (const auto& c : r.checks) {
        o.passed = o.passed && c.passed;
        d << c.name << "=" << (c.passed ? "pass" : "fail") << " ";
    }
    const HomogeneityProfile prof = profile(counterexample_fixture().p);
    const bool only_z = prof.separate_variables() == std::vector<std::size_t>{0} && prof.half_degree(0) == 1u;
    o.passed = o.passed && r.checks.size() == 5 && r.span_dimension == 3 && only_z && r.confirmed;
    d << "span_dimension=" << r.span_dimension << " profile_only_z_d1=" << (only_z ? "yes" : "no");
    o.detail = d.str();
    return o;
}

Outcome separate_on_counterexample() {
    const HermPoly p = parse_expression(kCounterexample, kXyz);
    const SeparateDecomposition d = decompose_separate(p, 1);
    const std::vector<std::string> w{"w1", "w2"};
    const HermPoly expected = parse_expression("|w1|^4+|w1^2-w1*w2|^2+|w2|^4", w);
    bool degrees = true;
    for (const auto& [m, c] : d.q.terms()) degrees = degrees && m.holo.order() % 2 == 0 && m.anti.order() % 2 == 0;
    // Substitution construction, computed here independently of the library's own check.
    const std::vector<HoloPoly> sub{HoloPoly::one(2), HoloPoly::variable(2, 0), HoloPoly::variable(2, 1)};
    const bool agree = compose_holo(p, sub) == d.q;
    const bool identity = compose_holo(p, d.coordinate_change(3)) == compose_holo(d.q, d.monomial_map(3));
    Outcome o;
    o.passed = d.verified && d.q == expected && d.block.block_gcd == 1 && d.block.exponent_divisor() == 2 && degrees &&
               agree && identity;
    o.detail = "Q=" + format_poly(d.q, w) + " d=" + std::to_string(d.block.block_gcd) +
               " (k-D)/d=" + std::to_string(d.block.exponent_divisor()) + " even_degrees=" + (degrees ? "yes" : "no") +
               " constructions_agree=" + (agree ? "yes" : "no") + " composed_identity=" + (identity ? "yes" : "no");
    return o;
}

Outcome single_round_trip() {
    testing::Gen g(1001);
    int ok = 0, instances = 0;
    while (instances < 200) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const HoloPoly h = g.monic_homogeneous(n, static_cast<unsigned>(g.integer(1, 3)), 3);
        const HermPoly s = g.one_variable(static_cast<unsigned>(g.integer(2, 6)), 3);
        const std::vector<HoloPoly> map{h};
        const HermPoly p = compose_holo(s, map);
        ++instances;
        try {
            const SingleDecomposition d = decompose_single(p);
            const std::vector<HoloPoly> back{d.h};
            if (d.verified && compose_holo(d.s, back) == p) ++ok;
        } catch (const Error&) {
        }
    }
    int rejected = 0, controls = 0;
    while (controls < 50) {
        const std::size_t n = static_cast<std::size_t>(g.integer(2, 3));
        const unsigned deg = static_cast<unsigned>(g.integer(1, 3));
        const std::size_t count = static_cast<std::size_t>(g.integer(2, 3));
        std::vector<HoloPoly> fs;
        for (std::size_t i = 0; i < count; ++i) fs.push_back(g.homogeneous(n, deg));
        if (span_dimension(fs) < count) continue;
        HermPoly p(n);
        for (const auto& f : fs) p += HermPoly::squared_modulus(f);
        ++controls;
        try {
            decompose_single(p);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NotDecomposable) ++rejected;
        }
    }
    return {ok == instances && rejected == controls,
            "recovered " + std::to_string(ok) + "/" + std::to_string(instances) + ", NotDecomposable " +
                std::to_string(rejected) + "/" + std::to_string(controls)};
}

Outcome full_suite() {
    testing::Gen g(2002);
    int ok = 0;
    const int instances = 100;
    for (int t = 0; t < instances; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        std::vector<unsigned> e;
        for (std::size_t j = 0; j < n; ++j) e.push_back(static_cast<unsigned>(g.integer(1, 3)));
        // Separate degrees N * e_j must be even for the hypothesis to hold.
        const bool all_even = std::all_of(e.begin(), e.end(), [](unsigned x) { return x % 2 == 0; });
        const unsigned total = all_even ? static_cast<unsigned>(g.integer(2, 4)) : 2 * static_cast<unsigned>(g.integer(1, 2));
        const HermPoly s = g.one_variable(total, 3);
        const std::vector<HoloPoly> map{monomial_of(e)};
        const HermPoly p = compose_holo(s, map);
        try {
            const FullDecomposition d = decompose_full(p);
            bool proportional = d.exponents.size() == n;
            for (std::size_t i = 0; proportional && i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) proportional = proportional && e[i] * d.exponents[j] == e[j] * d.exponents[i];
            const std::vector<HoloPoly> back{monomial_of(d.exponents)};
            if (d.verified && proportional && compose_holo(d.s, back) == p) ++ok;
        } catch (const Error&) {
        }
    }
    return {ok == instances, "recovered " + std::to_string(ok) + "/" + std::to_string(instances)};
}

Outcome averaging_identity() {
    testing::Gen g(3003);
    double worst = 0;
    const int instances = 50;
    for (int t = 0; t < instances; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const HermPoly p = g.hermitian_homogeneous(n, static_cast<unsigned>(g.integer(1, 4)), 4);
        std::vector<GaussianRational> c;
        std::vector<mpq_class> r;
        for (std::size_t j = 0; j < n; ++j) {
            c.push_back(g.coefficient());
            r.push_back(g.positive_rational());
        }
        const AveragedLevi a = averaged_levi(p, c, r);
        worst = std::max(worst, a.quadrature ? std::abs(*a.quadrature - a.exact) : INFINITY);
    }
    int null_ok = 0, null_total = 0;
    for (int t = 0; t < 20; ++t) {
        const testing::ProfileSpec spec = testing::random_profile(g, 3, 3);
        const HermPoly p = testing::profile_instance(g, spec, static_cast<std::size_t>(g.integer(1, 3)), t % 2 == 0);
        const FoliationMap f = build_foliation_map(profile(p), spec.block);
        for (const auto& field : f.null_fields) {
            // Each field is z -> (c_j z_j); c is the constant direction vector.
            std::vector<GaussianRational> c;
            std::vector<mpq_class> r;
            for (std::size_t j = 0; j < spec.dim; ++j) {
                c.push_back(field[j].coefficient(MultiIndex::unit(spec.dim, j)));
                r.push_back(g.positive_rational());
            }
            ++null_total;
            if (averaged_levi(p, c, r, false).exact_coefficient == 0) ++null_ok;
        }
    }
    std::ostringstream d;
    d << "max |exact - quadrature| = " << worst << " over " << instances << " instances (tol 1e-8); null-set zeros "
      << null_ok << "/" << null_total;
    return {worst <= 1e-8 && null_ok == null_total, d.str()};
}

Outcome hessian_correctness() {
    testing::Gen g(4004);
    double worst = 0;
    const int pairs = 100;
    for (int t = 0; t < pairs; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const HermPoly p = g.hermitian(n, 3, 4, false);
        const ComplexPoint x = g.point(n);
        const auto h = evaluate(hessian(p), x);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto fd = testing::wirtinger_difference(p, x, i, j, 1e-4);
                worst = std::max(worst, std::abs(fd - h(i, j)) / std::max(1.0, std::abs(h(i, j))));
            }
    }
    std::ostringstream d;
    d << "max relative deviation " << worst << " over " << pairs << " pairs (tol 1e-5)";
    return {worst <= 1e-5, d.str()};
}

Outcome determinant_identity() {
    testing::Gen g(5005);
    int pairs = 0, tuples = 0, failed = 0;
    while (pairs < 20) {
        const testing::ProfileSpec spec = testing::random_profile(g, 4, 2);
        const HermPoly p = testing::profile_instance(g, spec, static_cast<std::size_t>(g.integer(1, 2)), false);
        const FoliationMap f = build_foliation_map(profile(p), spec.block);
        ++pairs;
        for (const auto& rows : combinations(spec.dim, f.components.size()))
            for (std::size_t col = 0; col < spec.dim; ++col) {
                const DeterminantCheck c = determinant_identity_check(p, f.components, rows, col);
                tuples += static_cast<int>(c.checked);
                failed += static_cast<int>(c.failures.size());
            }
    }
    return {failed == 0, std::to_string(pairs) + " pairs, " + std::to_string(tuples) + " (beta, rows, column) checks, " +
                             std::to_string(failed) + " failures"};
}

Outcome parser_round_trip() {
    testing::Gen g(6006);
    const std::vector<std::string> pool{"z", "w1", "w2", "u", "v"};
    int ok = 0;
    const int instances = 1000;
    for (int t = 0; t < instances; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
        const std::vector<std::string> vars(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
        HermPoly p = g.hermitian(n, 3, static_cast<std::size_t>(g.integer(1, 6)), g.coin());
        if (g.coin()) p += HermPoly(MixedPoly::constant(n, g.coefficient(false)));
        if (parse_expression(format_poly(p, vars), vars) == p) ++ok;
    }
    const HermPoly parsed = parse_expression(kCounterexample, kXyz);
    const bool equal = parsed == counterexample_fixture().p;
    const bool nine = parsed.size() == 9;
    return {ok == instances && equal && nine,
            "round trip " + std::to_string(ok) + "/" + std::to_string(instances) + "; input string equals fixture: " +
                (equal ? "yes" : "no") + "; term count " + std::to_string(parsed.size()) + " (criterion expects 9)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 counterexample confirmation", counterexample_confirmation},
        {"2 separate decomposition of the counterexample", separate_on_counterexample},
        {"3 single decomposition round trip", single_round_trip},
        {"4 full separate homogeneity", full_suite},
        {"5 averaging identity", averaging_identity},
        {"6 hessian against finite differences", hessian_correctness},
        {"7 determinant identity", determinant_identity},
        {"8 parser", parser_round_trip},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
        std::printf("[%s] %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs.count());
        if (!o.passed) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
