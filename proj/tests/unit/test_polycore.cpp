#include <doctest.h>

#include "generators.hpp"
#include "hermpsh/counterexample.hpp"
#include "hermpsh/linear_algebra.hpp"
#include "hermpsh/parser.hpp"
#include "hermpsh/perfect_power.hpp"
#include "hermpsh/profile.hpp"

using namespace hermpsh;

namespace {

HoloPoly var(std::size_t dim, std::size_t j) { return HoloPoly::variable(dim, j); }

HermPoly herm(std::string_view text, const std::vector<std::string>& vars) { return parse_expression(text, vars); }

const std::vector<std::string> kXyz{"z", "w1", "w2"};

HermPoly counterexample_poly() {
    const std::size_t n = 3;
    const HoloPoly z = var(n, 0), w1 = var(n, 1), w2 = var(n, 2);
    return HermPoly::squared_modulus(z) * (HermPoly::squared_modulus(w1 * w1) +
                                           HermPoly::squared_modulus(w1 * w1 - w1 * w2) +
                                           HermPoly::squared_modulus(w2 * w2));
}

}  // namespace

TEST_CASE("gaussian rationals") {
    const GaussianRational a(mpq_class(1, 2), mpq_class(-3, 4));
    CHECK(a.str() == "1/2-3/4*i");
    CHECK(GaussianRational::i().str() == "i");
    CHECK((-GaussianRational::i()).str() == "-i");
    CHECK(GaussianRational(1, -1).str() == "1-i");
    CHECK(GaussianRational(mpq_class(2, 4)).str() == "1/2");
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(a * a.conj() == GaussianRational(a.norm()));
    CHECK(a / a == GaussianRational(1));
    CHECK(GaussianRational(1, 1).pow(4) == GaussianRational(-4));
}

TEST_CASE("multi-index order is graded lex with the first variable most significant") {
    CHECK(MultiIndex{1, 0} > MultiIndex{0, 1});
    CHECK(MultiIndex{0, 0, 2} > MultiIndex{1, 0, 0});
    CHECK(MultiIndex{2, 0} > MultiIndex{1, 1});
    CHECK(MultiIndex{1, 2} + MultiIndex{1, 0} == MultiIndex{2, 2});
    CHECK_THROWS_AS((MultiIndex{1, 0} - MultiIndex{0, 1}), Error);
    CHECK(MultiIndex{1, 2, 3}.slice(1, 2) == MultiIndex{2, 3});
}

TEST_CASE("hermitian construction") {
    const HermPoly::Entry one{{MultiIndex{1}, MultiIndex{1}}, 1};
    const HermPoly p = herm_from_terms(1, std::span(&one, 1));
    CHECK(p == HermPoly::squared_modulus(var(1, 0)));

    const HermPoly::Entry lone{{MultiIndex{2, 0}, MultiIndex{1, 1}}, 1};
    try {
        herm_from_terms(2, std::span(&lone, 1));
        FAIL("expected SymmetryViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SymmetryViolation);
    }

    // Expanded by hand: |w1|^4 + |w1^2 - w1 w2|^2 + |w2|^4 has five distinct terms.
    const std::vector<HermPoly::Entry> entries{
        {{MultiIndex{1, 2, 0}, MultiIndex{1, 2, 0}}, 2},  {{MultiIndex{1, 2, 0}, MultiIndex{1, 1, 1}}, -1},
        {{MultiIndex{1, 1, 1}, MultiIndex{1, 2, 0}}, -1}, {{MultiIndex{1, 1, 1}, MultiIndex{1, 1, 1}}, 1},
        {{MultiIndex{1, 0, 2}, MultiIndex{1, 0, 2}}, 1}};
    const HermPoly by_hand = herm_from_terms(3, entries);
    CHECK(by_hand == counterexample_poly());
    CHECK(by_hand.size() == 5);
}

TEST_CASE("evaluation") {
    const HermPoly m = HermPoly::squared_modulus(var(1, 0));
    const ComplexPoint p{{3, 4}};
    CHECK(evaluate(m, p) == doctest::Approx(25));
    const ComplexPoint ones{{1, 0}, {1, 0}, {1, 0}};
    CHECK(evaluate(counterexample_poly(), ones) == doctest::Approx(2));
    CHECK(evaluate(counterexample_poly(), ComplexPoint(3)) == 0);
}

TEST_CASE("composition with holomorphic maps") {
    const HermPoly w = HermPoly::squared_modulus(var(1, 0));
    const std::vector<HoloPoly> phi{var(2, 0) * var(2, 1)};
    CHECK(compose_holo(w, phi) == HermPoly::squared_modulus(var(2, 0) * var(2, 1)));

    const std::vector<HoloPoly> square{var(3, 0) * var(3, 0), var(3, 1), var(3, 2)};
    CHECK(compose_holo(counterexample_poly(), square) ==
          herm("|z|^4*(|w1|^4+|w1^2-w1*w2|^2+|w2|^4)", kXyz));
    CHECK(compose_holo(counterexample_poly(), identity_map(3)) == counterexample_poly());
}

TEST_CASE("pluriharmonic split") {
    const HoloPoly z = var(1, 0);
    const HermPoly p = HermPoly::squared_modulus(z) + HermPoly(MixedPoly::from_holo(z * z) + MixedPoly::conj_of_holo(z * z));
    const PluriharmonicSplit s = strip_pluriharmonic(p);
    CHECK(s.core == HermPoly::squared_modulus(z));
    CHECK(s.pluriharmonic == HermPoly(MixedPoly::from_holo(z * z) + MixedPoly::conj_of_holo(z * z)));
    CHECK(strip_pluriharmonic(counterexample_poly()).pluriharmonic.is_zero());
    CHECK(strip_pluriharmonic(counterexample_poly()).core == counterexample_poly());
    CHECK(strip_pluriharmonic(HermPoly(2)).core.is_zero());
}

TEST_CASE("homogeneity profile") {
    const HomogeneityProfile a = profile(counterexample_poly());
    CHECK(a.total_degree == 6u);
    CHECK(a.half_total() == 3u);
    CHECK(a.separate_variables() == std::vector<std::size_t>{0});
    CHECK(a.half_degree(0) == 1u);

    const HomogeneityProfile b = profile(HermPoly::squared_modulus(var(2, 0) * var(2, 1) * var(2, 1)));
    CHECK(b.total_degree == 6u);
    CHECK(b.half_degree(0) == 1u);
    CHECK(b.half_degree(1) == 2u);

    const HoloPoly z = var(1, 0);
    const HomogeneityProfile c = profile(HermPoly::squared_modulus(z) + HermPoly::squared_modulus(z * z));
    CHECK_FALSE(c.total_degree.has_value());
    CHECK_THROWS_AS(profile(HermPoly(1)), Error);
    CHECK_THROWS_AS(a.block(0), Error);

    const BlockParameters blk = a.block(1);
    CHECK(blk.half_total == 3);
    CHECK(blk.block_sum == 1);
    CHECK(blk.block_gcd == 1);
    CHECK(blk.exponent_divisor() == 2);

    try {
        profile(HermPoly::squared_modulus(var(2, 0))).block(1);
        FAIL("expected DegenerateCodimension");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateCodimension);
    }
}

TEST_CASE("perfect power base") {
    const HoloPoly z1 = var(2, 0), z2 = var(2, 1);
    const PerfectPower a = perfect_power_base(z1 * z1 * z2 * z2);
    CHECK(a.base == z1 * z2);
    CHECK(a.power == 2);
    CHECK(a.unit.is_one());

    const HoloPoly l = z1 + GaussianRational::i() * z2;
    const PerfectPower b = perfect_power_base(l.pow(3));
    CHECK(b.base == l);
    CHECK(b.power == 3);
    CHECK(b.unit.is_one());

    const PerfectPower c = perfect_power_base(GaussianRational(4) * z1 * z1);
    CHECK(c.base == z1);
    CHECK(c.power == 2);
    CHECK(c.unit == GaussianRational(4));

    CHECK_THROWS_AS(perfect_power_base(HoloPoly(2)), Error);
    CHECK_THROWS_AS(perfect_power_base(z1 + z1 * z2), Error);
    CHECK_FALSE(monic_root(z1 * z1 + z2 * z2, 2).has_value());
}

TEST_CASE("perfect power round trip on random inputs") {
    testing::Gen g(7);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const HoloPoly h = g.monic_homogeneous(n, static_cast<unsigned>(g.integer(1, 3)));
        const unsigned m = static_cast<unsigned>(g.integer(1, 4));
        const GaussianRational u = g.coefficient();
        const HoloPoly input = u * h.pow(m);
        const PerfectPower r = perfect_power_base(input);
        CHECK(r.unit * r.base.pow(r.power) == input);
        CHECK(r.power % m == 0);
        // The base of h itself divides out the same way.
        const PerfectPower rh = perfect_power_base(h);
        CHECK(r.base == rh.base);
        CHECK(r.power == m * rh.power);
    }
}

TEST_CASE("composition is additive and preserves symmetry") {
    testing::Gen g(11);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const std::size_t m = static_cast<std::size_t>(g.integer(1, 3));
        const HermPoly p = g.hermitian(n, 2, 3, false), q = g.hermitian(n, 2, 3, false);
        std::vector<HoloPoly> map;
        for (std::size_t j = 0; j < n; ++j) map.push_back(g.homogeneous(m, static_cast<unsigned>(g.integer(1, 2)), 2));
        const HermPoly lhs = compose_holo(p + q, map);
        CHECK(lhs == compose_holo(p, map) + compose_holo(q, map));
        CHECK(lhs.mixed().is_hermitian());
        CHECK(compose_holo(p, identity_map(n)) == p);
        const PluriharmonicSplit s = strip_pluriharmonic(p);
        CHECK(s.core + s.pluriharmonic == p);
        CHECK_FALSE(has_pluriharmonic_terms(s.core));
    }
}

TEST_CASE("evaluation is additive and multiplicative") {
    testing::Gen g(13);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const HermPoly p = g.hermitian(n, 2, 3, false), q = g.hermitian(n, 2, 3, false);
        const ComplexPoint x = g.point(n);
        const double a = evaluate(p, x), b = evaluate(q, x);
        CHECK(evaluate(p + q, x) == doctest::Approx(a + b).epsilon(1e-12).scale(1));
        CHECK(evaluate(p * q, x) == doctest::Approx(a * b).epsilon(1e-12).scale(1));
    }
}

TEST_CASE("division and determinants") {
    const HoloPoly z1 = var(2, 0), z2 = var(2, 1);
    const auto q = divide_exact((z1 + z2) * (z1 - z2), z1 - z2);
    REQUIRE(q.has_value());
    CHECK(*q == z1 + z2);
    CHECK_FALSE(divide_exact(z1 * z1 + z2, z1).has_value());

    Matrix<HoloPoly> m(2, 2, HoloPoly(2));
    m(0, 0) = z1;
    m(0, 1) = z2;
    m(1, 0) = z2;
    m(1, 1) = z1;
    CHECK(determinant(m) == z1 * z1 - z2 * z2);
}

TEST_CASE("cofactor and Bareiss determinants agree") {
    testing::Gen g(17);
    for (int t = 0; t < 5; ++t) {
        // 5x5 uses elimination; expanding along the first row with 4x4 minors uses cofactors.
        Matrix<HoloPoly> m(5, 5, HoloPoly(2));
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) m(r, c) = g.homogeneous(2, 1, 2);
        HoloPoly expansion(2);
        for (std::size_t c = 0; c < 5; ++c) {
            Matrix<HoloPoly> minor(4, 4, HoloPoly(2));
            for (std::size_t r = 1; r < 5; ++r)
                for (std::size_t cc = 0, k = 0; cc < 5; ++cc)
                    if (cc != c) minor(r - 1, k++) = m(r, cc);
            const HoloPoly term = m(0, c) * determinant(minor);
            expansion += c % 2 == 0 ? term : -term;
        }
        CHECK(determinant(m) == expansion);
    }
}

TEST_CASE("span dimension") {
    const HoloPoly w1 = var(2, 0), w2 = var(2, 1);
    CHECK(span_dimension({GaussianRational(2) * w1 * w1 - w1 * w2, w1 * w2 - w1 * w1, w2 * w2}) == 3);
    CHECK(span_dimension({w1, GaussianRational(2) * w1}) == 1);
    CHECK(span_dimension({}) == 0);
}
