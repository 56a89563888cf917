#include <doctest.h>

#include <cmath>
#include <random>

#include "schottky/halfplane.hpp"
#include "test_support.hpp"

using namespace schottky;
using schottky::testing::near;

namespace {
BoundaryPoint pt(double x) { return BoundaryPoint::real(x); }
const BoundaryPoint kInf = BoundaryPoint::infinity();

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidInput;
}
}  // namespace

TEST_CASE("cyclic order") {
    CHECK(cyclic_order(pt(0), pt(1), kInf) == 1);
    CHECK(cyclic_order(pt(1), pt(0), kInf) == -1);
    CHECK(cyclic_order(pt(0), pt(0), pt(1)) == 0);
    CHECK(cyclic_order(kInf, pt(-5), pt(2)) == 1);
}

TEST_CASE("pairs_linked") {
    CHECK(pairs_linked({pt(0), kInf}, {pt(-1), pt(1)}));
    CHECK_FALSE(pairs_linked({pt(0), kInf}, {pt(1), pt(3)}));
    CHECK(code_of([] { pairs_linked({pt(0), pt(1)}, {pt(1), pt(2)}); }) == ErrorCode::SharedEndpoint);
}

TEST_CASE("point_in_arc") {
    CHECK(point_in_arc(pt(0), pt(-1), pt(1), kInf));
    CHECK(point_in_arc(kInf, pt(-1), pt(1), pt(0)));
    CHECK_FALSE(point_in_arc(pt(2), pt(-1), pt(1), kInf));
    CHECK(code_of([] { point_in_arc(pt(0), pt(1), pt(1), kInf); }) == ErrorCode::DegenerateArc);
}

TEST_CASE("Arc helpers") {
    const Arc inner = Arc::avoiding(pt(-1), pt(1), kInf);
    CHECK(inner.contains(pt(0)));
    CHECK_FALSE(inner.contains(pt(3)));
    CHECK(near(inner.point_at(0.5).value(), 0.0, 1e-12));
    const Arc outer = Arc::through(pt(-1), pt(1), kInf);
    CHECK(outer.contains(kInf));
    CHECK(outer.point_at(0.5).is_infinity(1e-12));
}

TEST_CASE("axis and build_hyperbolic") {
    const Geodesic g = axis(MoebiusMap::normalize(2, 0, 0, 0.5));
    CHECK(near(g.from.value(), 0, 1e-12));
    CHECK(g.to.is_infinity());
    const Geodesic g2 = axis(MoebiusMap::normalize(5.0 / 3, 4.0 / 3, 4.0 / 3, 5.0 / 3));
    CHECK(near(g2.from.value(), -1, 1e-12));
    CHECK(near(g2.to.value(), 1, 1e-12));
    CHECK(code_of([] { axis(MoebiusMap::normalize(1, 1, 0, 1)); }) == ErrorCode::NotHyperbolic);

    CHECK(build_hyperbolic(pt(0), kInf, 2 * std::log(2.0))
              .approx_equal(MoebiusMap::normalize(2, 0, 0, 0.5), 1e-12));
    const double t = 0.7;
    CHECK(build_hyperbolic(pt(-1), pt(1), 2 * t)
              .approx_equal(MoebiusMap::normalize(std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t)), 1e-12));
    CHECK(build_hyperbolic(pt(-3), pt(-1), 2 * std::log(10.0))
              .approx_equal(MoebiusMap::normalize(-4.85, -14.85, 4.95, 14.95), 1e-9));
    CHECK(code_of([] { build_hyperbolic(pt(1), pt(1), 1.0); }) == ErrorCode::DegenerateAxis);
    CHECK(code_of([] { build_hyperbolic(pt(0), pt(1), 0.0); }) == ErrorCode::NonPositiveLength);
}

TEST_CASE("isometric circles") {
    auto [c1, c2] = isometric_circles(MoebiusMap::normalize(-4.85, -14.85, 4.95, 14.95));
    CHECK(near(c1.center(), -14.95 / 4.95, 1e-9));
    CHECK(near(c2.center(), -4.85 / 4.95, 1e-9));
    CHECK(near(c1.radius(), 1 / 4.95, 1e-9));
    auto [d1, d2] = isometric_circles(MoebiusMap::normalize(-4.85, 14.85, -4.95, 14.95));
    CHECK(near(d1.center(), 14.95 / 4.95, 1e-9));
    CHECK(near(d2.center(), 4.85 / 4.95, 1e-9));
    CHECK(near(d2.radius(), 1 / 4.95, 1e-9));
    CHECK(code_of([] { isometric_circles(MoebiusMap::normalize(2, 0, 0, 0.5)); }) == ErrorCode::InfinityFixed);
}

TEST_CASE("image_circle") {
    const CircleOnAxis c = image_circle(MoebiusMap::normalize(2, 0, 0, 0.5), CircleOnAxis(1, 0.5));
    CHECK(near(c.center(), 4, 1e-12));
    CHECK(near(c.radius(), 2, 1e-12));
    const CircleOnAxis same = image_circle(MoebiusMap::identity(), CircleOnAxis(3, 0.25));
    CHECK(near(same.center(), 3, 1e-15));
    const CircleOnAxis unit = image_circle(MoebiusMap::normalize(0, -1, 1, 0), CircleOnAxis(0, 1));
    CHECK(near(unit.center(), 0, 1e-12));
    CHECK(near(unit.radius(), 1, 1e-12));
    CHECK(code_of([] { image_circle(MoebiusMap::normalize(0, -1, 1, 0), CircleOnAxis(1, 1)); }) ==
          ErrorCode::PoleOnCircle);
}

TEST_CASE("geodesic_through") {
    Geodesic g = geodesic_through(M_PI / 4);
    CHECK(near(g.from.value(), 1, 1e-12));
    CHECK(near(g.to.value(), -1, 1e-12));
    g = geodesic_through(M_PI / 3);
    CHECK(near(g.from.value(), std::sqrt(3.0), 1e-12));
    CHECK(near(g.to.value(), -1 / std::sqrt(3.0), 1e-12));
    CHECK(code_of([] { geodesic_through(M_PI / 2); }) == ErrorCode::VerticalAxis);
    for (int k = 1; k < 100; ++k) {
        const double phi = k * M_PI / 100;
        if (k == 50) continue;
        const Geodesic h = geodesic_through(phi);
        REQUIRE(near(h.from.value() * h.to.value(), -1.0, 1e-9));
    }
}

TEST_CASE("property: Möbius maps preserve cyclic order; linking is symmetric") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 10000; ++k) {
        const MoebiusMap t = testing::random_map(rng);
        const BoundaryPoint p = testing::random_point(rng), q = testing::random_point(rng),
                            r = testing::random_point(rng);
        const int before = cyclic_order(p, q, r, 1e-6);
        if (before == 0) continue;
        REQUIRE(cyclic_order(apply_boundary(t, p), apply_boundary(t, q), apply_boundary(t, r)) == before);
    }
    for (int k = 0; k < 2000; ++k) {
        const PointPair x{testing::random_point(rng), testing::random_point(rng)};
        const PointPair y{testing::random_point(rng), testing::random_point(rng)};
        try {
            REQUIRE(pairs_linked(x, y) == pairs_linked(y, x));
        } catch (const Error&) {
        }
    }
}

TEST_CASE("property: build_hyperbolic round trip and isometric pairing") {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 2000; ++k) {
        const BoundaryPoint p = testing::random_point(rng), q = testing::random_point(rng);
        if (chordal_distance(p, q) < 0.05) continue;
        const double t = std::uniform_real_distribution<double>(0.3, 6.0)(rng);
        const MoebiusMap h = build_hyperbolic(p, q, t);
        const FixedPoints fp = fixed_points(h);
        REQUIRE(chordal_distance(fp.attracting, q) <= 1e-7);
        REQUIRE(chordal_distance(fp.repelling, p) <= 1e-7);
        REQUIRE(near(translation_length(h), t, 1e-7));

        if (std::abs(h.c()) < 1e-3) continue;
        const auto [first, second] = isometric_circles(h);
        const CircleOnAxis img = image_circle(h, first);
        REQUIRE(near(img.center(), second.center(), 1e-9 * std::max(1.0, std::abs(second.center()))));
        REQUIRE(near(img.radius(), second.radius(), 1e-9 * std::max(1.0, second.radius())));
        REQUIRE(second.contains(apply_boundary(h, BoundaryPoint::infinity()), 0.0));
    }
}
