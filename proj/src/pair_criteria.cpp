#include "schottky/pair_criteria.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace schottky {

std::string_view to_string(PairCaseKind kind) {
    switch (kind) {
        case PairCaseKind::Intersecting: return "intersecting";
        case PairCaseKind::Disjoint: return "disjoint";
        case PairCaseKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

PairCase pair_case(const MoebiusMap& a, const MoebiusMap& b, double tol) {
    const FixedPoints fa = fixed_points(a, tol);
    const FixedPoints fb = fixed_points(b, tol);
    const bool att_att = same_point(fa.attracting, fb.attracting, tol);
    const bool rep_rep = same_point(fa.repelling, fb.repelling, tol);
    const bool att_rep = same_point(fa.attracting, fb.repelling, tol);
    const bool rep_att = same_point(fa.repelling, fb.attracting, tol);
    if ((att_att && rep_rep) || (att_rep && rep_att)) return {PairCaseKind::Degenerate, "same axis"};
    if (att_att || rep_rep || att_rep || rep_att) return {PairCaseKind::Degenerate, "shared endpoint"};
    const bool linked = pairs_linked({fa.repelling, fa.attracting}, {fb.repelling, fb.attracting}, tol);
    return {linked ? PairCaseKind::Intersecting : PairCaseKind::Disjoint, ""};
}

CommutatorVerdict intersecting_pair_schottky_test(const MoebiusMap& a, const MoebiusMap& b,
                                                  double tol) {
    if (pair_case(a, b, tol).kind != PairCaseKind::Intersecting) {
        throw Error(ErrorCode::WrongCase, "axes do not cross");
    }
    CommutatorVerdict v;
    v.commutator_trace = commutator_trace(a, b);
    const double abs_tr = std::abs(v.commutator_trace);
    if (abs_tr > 2.0 + tol) {
        v.commutator_kind = Kind::Hyperbolic;
        v.schottky = true;
    } else if (std::abs(abs_tr - 2.0) <= tol) {
        v.commutator_kind = Kind::Parabolic;
        v.reason = "parabolic commutator";
    } else {
        v.commutator_kind = Kind::Elliptic;
        v.reason = "elliptic commutator";
    }
    return v;
}

bool is_standard_orientation(const MoebiusMap& a, const MoebiusMap& b, double tol) {
    const FixedPoints fa = fixed_points(a, tol);
    const FixedPoints fb = fixed_points(b, tol);
    // The arc avoiding rfp(a) trivially excludes it; only rfp(b) can intrude.
    return !point_in_arc(fb.repelling, fa.attracting, fb.attracting, fa.repelling, tol);
}

OrientedPair orient_pair_standard(const MoebiusMap& a, const MoebiusMap& b, double tol) {
    const PairCase pc = pair_case(a, b, tol);
    if (pc.kind == PairCaseKind::Intersecting) throw Error(ErrorCode::WrongCase, "axes cross");
    if (pc.kind == PairCaseKind::Degenerate) throw Error(ErrorCode::Degenerate, pc.reason);

    constexpr std::array<std::pair<bool, bool>, 4> kChoices{
        {{false, false}, {false, true}, {true, false}, {true, true}}};
    for (const auto& [inv_a, inv_b] : kChoices) {
        const MoebiusMap x = inv_a ? inverse(a, tol) : a;
        const MoebiusMap y = inv_b ? inverse(b, tol) : b;
        if (is_standard_orientation(x, y, tol)) return {x, y, inv_a, inv_b};
    }
    // Inverting one generator always flips adjacency for disjoint axes.
    throw Error(ErrorCode::Degenerate, "no inversion choice gives the standard orientation");
}

Lemma3Result lemma3_classical_test(const OrientedPair& pair, double tol) {
    if (!is_standard_orientation(pair.first, pair.second, tol)) {
        throw Error(ErrorCode::NotStandardOrientation, "attracting fixed points are not adjacent");
    }
    const MoebiusMap test = compose(inverse(pair.second, tol), pair.first, tol);
    if (classify(test, tol) != Kind::Hyperbolic) {
        throw Error(ErrorCode::TestElementNotHyperbolic,
                    std::string("B^-1 A is ") + std::string(to_string(classify(test, tol))));
    }
    const FixedPoints fa = fixed_points(pair.first, tol);
    const FixedPoints fb = fixed_points(pair.second, tol);
    Lemma3Result res;
    res.test_fixed_points = fixed_points(test, tol);
    res.classical =
        point_in_arc(res.test_fixed_points.attracting, fa.repelling, fb.repelling, fa.attracting, tol) &&
        point_in_arc(res.test_fixed_points.repelling, fa.repelling, fb.repelling, fa.attracting, tol);
    return res;
}

namespace {

// Point at `fraction` of the way from `from` to `to` along `arc`, whose
// endpoints are {from, to} in some order.
BoundaryPoint along(const Arc& arc, const BoundaryPoint& from, double fraction, double tol) {
    if (same_point(arc.start, from, tol)) return arc.point_at(fraction);
    return arc.point_at(1.0 - fraction);
}

double fraction_of(const Arc& arc, const BoundaryPoint& from, const BoundaryPoint& p) {
    const double two_pi = 2.0 * std::numbers::pi;
    double off = std::fmod(p.angle() - arc.start.angle(), two_pi);
    if (off < 0.0) off += two_pi;
    const double f = off / arc.length();
    return same_point(arc.start, from, 1e-15) ? f : 1.0 - f;
}

// Circle whose interval is the arc between u and v that contains `inside`;
// nullopt when that arc passes through ∞.
std::optional<CircleOnAxis> circle_around(const BoundaryPoint& u, const BoundaryPoint& v,
                                          const BoundaryPoint& inside, double tol) {
    if (u.is_infinity(tol) || v.is_infinity(tol)) return std::nullopt;
    const Arc arc = Arc::through(u, v, inside, tol);
    if (arc.contains(BoundaryPoint::infinity(), tol)) return std::nullopt;
    return CircleOnAxis::from_feet(u.value(), v.value(), tol);
}

}  // namespace

SchottkySystem lemma3_build_circles(const OrientedPair& pair, double tol) {
    const Lemma3Result test = lemma3_classical_test(pair, tol);
    if (!test.classical) {
        throw Error(ErrorCode::ConstructionFailed, "pair is not classical on these generators");
    }
    const MoebiusMap& a = pair.first;
    const MoebiusMap& b = pair.second;
    const MoebiusMap a_inv = inverse(a, tol);
    const MoebiusMap b_inv = inverse(b, tol);
    const FixedPoints fa = fixed_points(a, tol);
    const FixedPoints fb = fixed_points(b, tol);
    const BoundaryPoint inf = BoundaryPoint::infinity();

    // x ranges over the interval cut off by the axis of B⁻¹A.
    const Arc x_arc = Arc::avoiding(test.test_fixed_points.attracting,
                                    test.test_fixed_points.repelling, fa.repelling, tol);
    std::vector<BoundaryPoint> xs;
    if (x_arc.contains(inf, tol)) xs.push_back(inf);
    for (double f : {0.5, 0.25, 0.75, 0.125, 0.875}) xs.push_back(x_arc.point_at(f));

    // Free endpoints: a point w between the fixed points of the generator, on
    // the side away from the other generator, and its image.
    auto free_points = [&](const MoebiusMap& g, const FixedPoints& fg, const FixedPoints& fo) {
        const Arc far = Arc::avoiding(fg.repelling, fg.attracting, fo.attracting, tol);
        std::vector<BoundaryPoint> ws;
        if (far.contains(inf, tol)) {
            // Put ∞ between w and g(w): w is ∞ pulled back by half a translation.
            const MoebiusMap half =
                build_hyperbolic(fg.repelling, fg.attracting, 0.5 * translation_length(g, tol), tol);
            ws.push_back(apply_boundary(inverse(half, tol), inf));
        }
        for (double f : {0.5, 0.25, 0.75}) ws.push_back(far.point_at(f));
        return ws;
    };
    const std::vector<BoundaryPoint> was = free_points(a, fa, fb);
    const std::vector<BoundaryPoint> wbs = free_points(b, fb, fa);

    for (const BoundaryPoint& x : xs) {
        const BoundaryPoint ax = apply_boundary(a, x);
        const BoundaryPoint bx = apply_boundary(b, x);
        const Arc y_arc = Arc::avoiding(ax, bx, fa.repelling, tol);

        std::vector<std::pair<double, double>> splits;
        if (y_arc.contains(inf, tol)) {
            const double f = fraction_of(y_arc, ax, inf);
            splits.emplace_back(0.5 * f, 0.5 * (1.0 + f));
        }
        splits.insert(splits.end(), {{1.0 / 3.0, 2.0 / 3.0}, {0.9, 0.95}, {0.05, 0.1}, {0.1, 0.9}});

        for (const auto& [fy, fz] : splits) {
            const BoundaryPoint y = along(y_arc, ax, fy, tol);
            const BoundaryPoint z = along(y_arc, ax, fz, tol);
            const BoundaryPoint a_inv_y = apply_boundary(a_inv, y);
            const BoundaryPoint b_inv_z = apply_boundary(b_inv, z);
            for (const BoundaryPoint& wa : was) {
                for (const BoundaryPoint& wb : wbs) {
                    const auto ca = circle_around(a_inv_y, wa, fa.repelling, tol);
                    const auto ca2 = circle_around(y, apply_boundary(a, wa), fa.attracting, tol);
                    const auto cb = circle_around(b_inv_z, wb, fb.repelling, tol);
                    const auto cb2 = circle_around(z, apply_boundary(b, wb), fb.attracting, tol);
                    if (!ca || !ca2 || !cb || !cb2) continue;
                    SchottkySystem sys{{a, b}, {CirclePair{*ca, *ca2}, CirclePair{*cb, *cb2}}};
                    if (passed(verify_classical(sys, tol))) return sys;
                }
            }
        }
    }
    throw Error(ErrorCode::ConstructionFailed,
                "no candidate circles avoid ∞; conjugate to move ∞ into the ordinary set");
}

SchottkySystem restore_marking(const OrientedPair& pair, const SchottkySystem& oriented, double tol) {
    SchottkySystem out = oriented;
    const bool inverted[2] = {pair.inverted_first, pair.inverted_second};
    for (std::size_t i = 0; i < 2; ++i) {
        if (!inverted[i]) continue;
        // g⁻¹ maps ext C onto int C'  ⇔  g maps ext C' onto int C.
        out.generators[i] = inverse(oriented.generators[i], tol);
        std::swap(out.pairs[i].source, out.pairs[i].target);
    }
    return out;
}

std::string Theorem4Certificate::labeling() const {
    const std::string x = swapped ? "B" : "A";
    const std::string y = swapped ? "A" : "B";
    return "(" + x + (inverted_first ? "^-1" : "") + ", " + y + (inverted_second ? "^-1" : "") + ")";
}

std::optional<Theorem4Certificate> theorem4_separation_certificate(const MoebiusMap& a,
                                                                   const MoebiusMap& b,
                                                                   double tol) {
    const PairCase pc = pair_case(a, b, tol);
    if (pc.kind != PairCaseKind::Disjoint) throw Error(ErrorCode::WrongCase, "axes must be disjoint");

    constexpr std::array<std::pair<bool, bool>, 4> kInversions{
        {{false, false}, {false, true}, {true, false}, {true, true}}};
    for (bool swapped : {false, true}) {
        const MoebiusMap& first = swapped ? b : a;
        const MoebiusMap& second = swapped ? a : b;
        for (const auto& [inv_x, inv_y] : kInversions) {
            const MoebiusMap x = inv_x ? inverse(first, tol) : first;
            const MoebiusMap y = inv_y ? inverse(second, tol) : second;
            const MoebiusMap probe = compose(y, inverse(x, tol), tol);
            if (classify(probe, tol) != Kind::Hyperbolic) continue;
            const BoundaryPoint sep = fixed_points(probe, tol).attracting;
            const FixedPoints fx = fixed_points(x, tol);
            const FixedPoints fy = fixed_points(y, tol);
            if (point_in_arc(sep, fx.attracting, fx.repelling, fy.attracting, tol)) {
                return Theorem4Certificate{swapped, inv_x, inv_y, sep};
            }
        }
    }
    return std::nullopt;
}

}  // namespace schottky
