#include "schottky/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "schottky/halfplane.hpp"
#include "schottky/pair_criteria.hpp"

namespace schottky {

namespace {

constexpr int kMaxDoublings = 40;

void add_generator(SchottkySystem& sys, double repelling, double attracting, double length, double tol) {
    const MoebiusMap g =
        build_hyperbolic(BoundaryPoint::real(repelling), BoundaryPoint::real(attracting), length, tol);
    const auto [source, target] = isometric_circles(g, tol);
    sys.generators.push_back(g);
    sys.pairs.push_back({source, target});
}

SchottkySystem layout(int n, int h, double length, double tol) {
    SchottkySystem sys;
    std::vector<double> endpoints;
    for (int k = 0; k < 2 * n; ++k) {
        // Directions spread over (0, π/2): each geodesic through i appears once.
        const double phi = (2.0 * k + 1.0) * std::numbers::pi / (8.0 * n);
        const Geodesic geo = geodesic_through(phi, tol);
        add_generator(sys, geo.from.value(), geo.to.value(), length, tol);
        endpoints.push_back(geo.from.value());
        endpoints.push_back(geo.to.value());
    }
    if (h >= 2) {
        double lo = -1.0, hi = 1.0;
        if (!endpoints.empty()) {
            std::sort(endpoints.begin(), endpoints.end());
            lo = endpoints[0];
            hi = endpoints[1];
        }
        const double width = hi - lo;
        for (int m = 1; m <= h - 1; ++m) {
            const double f = std::pow(3.0, -m);
            add_generator(sys, lo + f * width, hi - f * width, length, tol);
        }
    }
    return sys;
}

}  // namespace

double auto_start_length() { return 2.0 * std::log(8.0); }

SchottkySystem standard_group(int n, int h, std::optional<double> length, double tol) {
    rank_genus_relation(n, h);  // validates (n, h)
    if (length) {
        if (!(*length > 0.0)) throw Error(ErrorCode::NonPositiveLength, "translation length must be positive");
        SchottkySystem sys = layout(n, h, *length, tol);
        if (!passed(verify_classical(sys, tol))) {
            throw Error(ErrorCode::ConstructionFailed, "isometric circles do not certify at this length");
        }
        return sys;
    }
    double t = auto_start_length();
    for (int i = 0; i <= kMaxDoublings; ++i, t *= 2.0) {
        SchottkySystem sys = layout(n, h, t, tol);
        if (passed(verify_classical(sys, tol))) return sys;
    }
    throw Error(ErrorCode::AutoGrowthExhausted, "no certification after 40 doublings");
}

std::pair<MoebiusMap, MoebiusMap> one_holed_torus_pair(double lambda, double t, double tol) {
    if (!(lambda > 1.0) || !(t > 0.0)) throw Error(ErrorCode::InvalidInput, "need λ > 1 and t > 0");
    const MoebiusMap a = MoebiusMap::normalize(lambda, 0.0, 0.0, 1.0 / lambda, tol);
    const MoebiusMap b = MoebiusMap::normalize(std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t), tol);
    const CommutatorVerdict v = intersecting_pair_schottky_test(a, b, tol);
    if (!v.schottky) throw Error(ErrorCode::NotSchottky, v.reason);
    return {a, b};
}

NonclassicalExample nonclassical_pair_example(std::optional<double> length, double tol) {
    double t = length.value_or(2.0 * std::log(10.0));
    if (!(t > 0.0)) throw Error(ErrorCode::NonPositiveLength, "translation length must be positive");
    for (int i = 0; i <= kMaxDoublings; ++i, t *= 2.0) {
        NonclassicalExample ex;
        ex.length = t;
        ex.a = build_hyperbolic(BoundaryPoint::real(-3.0), BoundaryPoint::real(-1.0), t, tol);
        ex.b = build_hyperbolic(BoundaryPoint::real(3.0), BoundaryPoint::real(1.0), t, tol);
        ex.ab = compose(ex.a, ex.b, tol);
        const auto [ca, ca2] = isometric_circles(ex.a, tol);
        const auto [cb, cb2] = isometric_circles(ex.b, tol);
        ex.witness = SchottkySystem{{ex.a, ex.b}, {CirclePair{ca, ca2}, CirclePair{cb, cb2}}};
        if (passed(verify_classical(ex.witness, tol))) return ex;
    }
    throw Error(ErrorCode::AutoGrowthExhausted, "witness never certified");
}

}  // namespace schottky
