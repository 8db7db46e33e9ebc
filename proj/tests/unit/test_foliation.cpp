#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "hermpsh/foliation.hpp"
#include "hermpsh/parser.hpp"

using namespace hermpsh;

namespace {

HoloPoly var(std::size_t dim, std::size_t j) { return HoloPoly::variable(dim, j); }

const std::vector<std::string> kXyz{"z", "w1", "w2"};

HermPoly counterexample_poly() { return parse_expression("|z|^2*(|w1|^4+|w1^2-w1*w2|^2+|w2|^4)", kXyz); }

HoloPoly holo(std::string_view text) { return parse_holomorphic(text, kXyz); }

}  // namespace

TEST_CASE("beta decomposition examples") {
    const BetaDecomposition d = p_beta_decompose(counterexample_poly());
    CHECK(d.total_degree == 6);
    CHECK(d.parts.size() == 3);
    CHECK(d.parts.at(MultiIndex{1, 2, 0}) == holo("2*z*w1^2-z*w1*w2"));
    CHECK(d.parts.at(MultiIndex{1, 1, 1}) == holo("z*w1*w2-z*w1^2"));
    CHECK(d.parts.at(MultiIndex{1, 0, 2}) == holo("z*w2^2"));
    CHECK(d.reassemble() == counterexample_poly());

    const HoloPoly z = var(1, 0);
    try {
        p_beta_decompose(HermPoly::squared_modulus(z) + HermPoly::squared_modulus(z * z));
        FAIL("expected NotHomogeneous");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHomogeneous);
    }
    try {
        p_beta_decompose(HermPoly(MixedPoly::from_holo(z * z) + MixedPoly::conj_of_holo(z * z)));
        FAIL("expected HasPluriharmonicTerms");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HasPluriharmonicTerms);
    }
}

TEST_CASE("foliation map examples") {
    const FoliationMap f = build_foliation_map(profile(counterexample_poly()), 1);
    REQUIRE(f.components.size() == 2);
    CHECK(f.components[0] == holo("z*w1^2"));
    CHECK(f.components[1] == holo("z*w2^2"));
    REQUIRE(f.null_fields.size() == 1);
    CHECK(f.null_fields[0][0] == holo("2*z"));
    CHECK(f.null_fields[0][1] == holo("-w1"));
    CHECK(f.null_fields[0][2] == holo("-w2"));
    CHECK(fields_in_jacobian_kernel(f));

    const FoliationMap g = build_foliation_map(profile(HermPoly::squared_modulus(var(2, 0) * var(2, 1))), 1);
    REQUIRE(g.components.size() == 1);
    CHECK(g.components[0] == var(2, 0) * var(2, 1));

    try {
        build_foliation_map(profile(HermPoly::squared_modulus(var(2, 0))), 1);
        FAIL("expected DegenerateCodimension");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateCodimension);
    }
}

TEST_CASE("levi null direction examples") {
    const HermPoly p = counterexample_poly();
    CHECK(verify_levi_null_directions(p, build_foliation_map(profile(p), 1)).passed);

    const HoloPoly a = var(2, 0), b = var(2, 1);
    const FoliationMap f{{a * b}, {{a, -b}}};
    CHECK(verify_levi_null_directions(HermPoly::squared_modulus(a * b), f).passed);

    const HermPoly s = HermPoly::squared_modulus(a) + HermPoly::squared_modulus(b);
    const NullDirectionCheck c = verify_levi_null_directions(s, f);
    CHECK_FALSE(c.passed);
    REQUIRE(c.residuals.size() == 1);
    CHECK(c.residuals[0] == s.mixed());
}

TEST_CASE("determinant identity examples") {
    const HermPoly p = counterexample_poly();
    const FoliationMap f = build_foliation_map(profile(p), 1);
    const DeterminantCheck c = determinant_identity_check(p, f.components, {1, 2}, 0);
    CHECK(c.passed);
    CHECK(c.checked == 3);

    const HoloPoly a = var(2, 0), b = var(2, 1);
    const HermPoly q = HermPoly::squared_modulus(a * a) + HermPoly::squared_modulus(b * b);
    const DeterminantCheck d = determinant_identity_check(q, {a}, {1}, 0);
    CHECK_FALSE(d.passed);
    CHECK(std::find(d.failures.begin(), d.failures.end(), MultiIndex{0, 2}) != d.failures.end());
    // The part at beta = (2, 0) has no z_2 dependence, so both sides vanish there.
    CHECK(std::find(d.failures.begin(), d.failures.end(), MultiIndex{2, 0}) == d.failures.end());

    try {
        determinant_identity_check(p, {holo("z*w1"), holo("2*z*w1")}, {1, 2}, 0);
        FAIL("expected SingularMap");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularMap);
    }
    CHECK_THROWS_AS(determinant_identity_check(p, f.components, {1}, 0), Error);
}

TEST_CASE("beta decomposition reassembles exactly") {
    testing::Gen g(37);
    for (int t = 0; t < 40; ++t) {
        const HermPoly p = strip_pluriharmonic(g.hermitian_homogeneous(static_cast<std::size_t>(g.integer(1, 3)),
                                                                       static_cast<unsigned>(g.integer(1, 3)), 4))
                               .core;
        const BetaDecomposition d = p_beta_decompose(p);
        CHECK(d.reassemble() == p);
        for (const auto& [beta, part] : d.parts) {
            CHECK(beta.order() >= 1);
            CHECK(beta.order() < d.total_degree);
            CHECK(part.homogeneous_degree() == d.total_degree - beta.order());
        }
    }
}

TEST_CASE("null fields on random profiles") {
    testing::Gen g(41);
    for (int t = 0; t < 40; ++t) {
        const testing::ProfileSpec spec = testing::random_profile(g, 4, 3);
        const HermPoly p = testing::profile_instance(g, spec, static_cast<std::size_t>(g.integer(1, 3)), t % 2 == 0);
        const FoliationMap f = build_foliation_map(profile(p), spec.block);
        CHECK(f.components.size() == spec.dim - spec.block);
        CHECK(fields_in_jacobian_kernel(f));
        CHECK(verify_levi_null_directions(p, f).passed);
    }
}

TEST_CASE("determinant identity is invariant under row permutations") {
    testing::Gen g(43);
    int tested = 0;
    for (int t = 0; t < 40 && tested < 15; ++t) {
        const testing::ProfileSpec spec = testing::random_profile(g, 4, 2);
        if (spec.dim - spec.block < 2) continue;
        const HermPoly p = testing::profile_instance(g, spec, 2, false);
        const FoliationMap f = build_foliation_map(profile(p), spec.block);
        std::vector<std::size_t> rows;
        for (std::size_t r = spec.dim - f.components.size(); r < spec.dim; ++r) rows.push_back(r);
        const std::size_t col = static_cast<std::size_t>(g.integer(0, static_cast<int>(spec.dim) - 1));
        const DeterminantCheck base = determinant_identity_check(p, f.components, rows, col);
        CHECK(base.passed);
        std::reverse(rows.begin(), rows.end());
        const DeterminantCheck swapped = determinant_identity_check(p, f.components, rows, col);
        CHECK(swapped.passed == base.passed);
        CHECK(swapped.failures == base.failures);
        ++tested;
    }
    CHECK(tested > 0);
}
