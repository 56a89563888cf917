#include <doctest.h>

#include <cmath>

#include "schottky/constructions.hpp"
#include "schottky/pair_criteria.hpp"
#include "test_support.hpp"

using namespace schottky;
using schottky::testing::near;

namespace {

double margin_of(const SchottkySystem& sys) {
    const Verification v = verify_classical(sys);
    REQUIRE(passed(v));
    return std::get<Certificate>(v).margin;
}

}  // namespace

TEST_CASE("standard_group certifies the small grid") {
    for (int n = 0; n <= 3; ++n) {
        for (int h = 1; h <= 5; ++h) {
            if (n == 0 && h == 1) continue;
            if (2 * n + h - 1 > 6) continue;
            CAPTURE(n);
            CAPTURE(h);
            const SchottkySystem sys = standard_group(n, h);
            REQUIRE(sys.rank() == std::size_t(2 * n + h - 1));
            REQUIRE(passed(verify_classical(sys)));
            const QuotientTopology top = count_quotient_boundaries(sys);
            CHECK(top.boundaries == h);
            CHECK(top.genus == n);
            CHECK(top.rank == 2 * n + h - 1);
        }
    }
}

TEST_CASE("standard_group errors") {
    CHECK_THROWS_AS(standard_group(0, 1), Error);
    try {
        standard_group(1, 1, 0.1);
        FAIL("expected ConstructionFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConstructionFailed);
    }
    try {
        standard_group(-1, 2);
        FAIL("expected InvalidSurface");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidSurface);
    }
}

TEST_CASE("property: longer translation keeps certification and grows margin") {
    for (const auto& [n, h] : {std::pair{1, 1}, {0, 3}, {1, 2}, {2, 1}}) {
        const double t = auto_start_length() * 2;
        const SchottkySystem a = standard_group(n, h, t);
        const SchottkySystem b = standard_group(n, h, 2 * t);
        CHECK(margin_of(b) >= margin_of(a) - 1e-12);
    }
}

TEST_CASE("one_holed_torus_pair") {
    const auto [a, b] = one_holed_torus_pair(2.0, 1.2);
    CHECK(near(a.trace(), 2.5, 1e-12));
    CHECK(near(b.trace(), 2 * std::cosh(1.2), 1e-12));
    try {
        one_holed_torus_pair(2.0, 1.0);
        FAIL("expected NotSchottky");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSchottky);
    }
    CHECK_THROWS_AS(one_holed_torus_pair(2.0, std::log(3.0)), Error);
}

TEST_CASE("nonclassical_pair_example") {
    const NonclassicalExample ex = nonclassical_pair_example();
    CHECK(near(ex.length, 2 * std::log(10.0), 1e-12));
    REQUIRE(passed(verify_classical(ex.witness)));
    CHECK(near(std::get<Certificate>(verify_classical(ex.witness)).margin, 2 * (4.85 - 1) / 4.95, 1e-9));
    CHECK(ex.ab.approx_equal(compose(ex.a, ex.b), 1e-12));
    CHECK(compose(inverse(ex.a), ex.ab).approx_equal(ex.b, 1e-9));
    CHECK(pair_case(ex.a, ex.ab).kind == PairCaseKind::Disjoint);
    CHECK_FALSE(lemma3_classical_test(orient_pair_standard(ex.a, ex.ab)).classical);
    CHECK(theorem4_separation_certificate(ex.a, ex.ab).has_value());
    CHECK(near(ex.a.a(), -4.85, 1e-12));
    CHECK(near(ex.ab.a(), 97.03, 1e-8));
    CHECK(near(ex.ab.d(), 297.01, 1e-8));
}
