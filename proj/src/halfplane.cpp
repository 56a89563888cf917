#include "schottky/halfplane.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace schottky {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_positive(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

double cross(const BoundaryPoint& p, const BoundaryPoint& q) {
    return p.x() * q.y() - q.x() * p.y();
}

}  // namespace

CircleOnAxis::CircleOnAxis(double center, double radius, double tol)
    : center_(center), radius_(radius) {
    if (!std::isfinite(center) || !std::isfinite(radius) || !(radius > tol)) {
        throw Error(ErrorCode::InvalidCircle,
                    "center " + std::to_string(center) + " radius " + std::to_string(radius));
    }
}

CircleOnAxis CircleOnAxis::from_feet(double u, double v, double tol) {
    return CircleOnAxis(0.5 * (u + v), 0.5 * std::abs(v - u), tol);
}

bool CircleOnAxis::contains(const BoundaryPoint& p, double tol) const {
    if (p.is_infinity()) return false;
    return radius_ - std::abs(p.value() - center_) > tol;
}

int cyclic_order(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r,
                 double tol) {
    if (same_point(p, q, tol) || same_point(q, r, tol) || same_point(r, p, tol)) return 0;
    const double s = cross(p, q) * cross(q, r) * cross(r, p);
    return s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
}

bool pairs_linked(const PointPair& first, const PointPair& second, double tol) {
    const BoundaryPoint pts[4] = {first.first, first.second, second.first, second.second};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (same_point(pts[i], pts[j], tol)) {
                throw Error(ErrorCode::SharedEndpoint, "endpoint pairs share a point");
            }
        }
    }
    return cyclic_order(first.first, second.first, first.second, tol) !=
           cyclic_order(first.first, second.second, first.second, tol);
}

bool point_in_arc(const BoundaryPoint& p, const BoundaryPoint& u, const BoundaryPoint& v,
                  const BoundaryPoint& w, double tol) {
    if (same_point(u, v, tol) || same_point(v, w, tol) || same_point(w, u, tol)) {
        throw Error(ErrorCode::DegenerateArc, "arc endpoints and the excluded point coincide");
    }
    const int side = cyclic_order(u, p, v, tol);
    if (side == 0) return false;  // open arc
    return side != cyclic_order(u, w, v, tol);
}

Arc Arc::avoiding(const BoundaryPoint& u, const BoundaryPoint& v, const BoundaryPoint& w,
                  double tol) {
    if (same_point(u, v, tol) || same_point(v, w, tol) || same_point(w, u, tol)) {
        throw Error(ErrorCode::DegenerateArc, "arc endpoints and the excluded point coincide");
    }
    // The positive arc u → v contains w exactly when (u, w, v) is positive.
    if (cyclic_order(u, w, v, tol) > 0) return Arc{v, u};
    return Arc{u, v};
}

Arc Arc::through(const BoundaryPoint& u, const BoundaryPoint& v, const BoundaryPoint& w,
                 double tol) {
    const Arc other = avoiding(u, v, w, tol);
    return Arc{other.end, other.start};
}

double Arc::length() const {
    const double len = wrap_positive(end.angle() - start.angle());
    return len == 0.0 ? kTwoPi : len;
}

bool Arc::contains(const BoundaryPoint& p, double tol) const {
    if (same_point(p, start, tol) || same_point(p, end, tol)) return false;
    return wrap_positive(p.angle() - start.angle()) < length();
}

BoundaryPoint Arc::point_at(double fraction) const {
    return BoundaryPoint::from_angle(start.angle() + fraction * length());
}

Geodesic axis(const MoebiusMap& t, double tol) {
    const FixedPoints fp = fixed_points(t, tol);
    return {fp.repelling, fp.attracting};
}

MoebiusMap build_hyperbolic(const BoundaryPoint& repelling, const BoundaryPoint& attracting,
                            double length, double tol) {
    if (same_point(repelling, attracting, tol)) {
        throw Error(ErrorCode::DegenerateAxis, "axis endpoints coincide");
    }
    if (!(length > 0.0)) {
        throw Error(ErrorCode::NonPositiveLength, "translation length must be positive");
    }
    // F sends ∞ ↦ attracting and 0 ↦ repelling; columns are the projective pairs.
    double qx = attracting.x(), qy = attracting.y();
    double px = repelling.x(), py = repelling.y();
    if (qx * py - px * qy < 0.0) {
        px = -px;
        py = -py;
    }
    const Matrix2 f{qx, px, qy, py};
    const double det = f.det();
    const Matrix2 f_inv{py / det, -px / det, -qy / det, qx / det};
    const double mult = std::exp(0.5 * length);
    const Matrix2 dil{mult, 0.0, 0.0, 1.0 / mult};
    return MoebiusMap::normalize(f * dil * f_inv, tol);
}

std::pair<CircleOnAxis, CircleOnAxis> isometric_circles(const MoebiusMap& t, double tol) {
    if (std::abs(t.c()) <= tol) {
        throw Error(ErrorCode::InfinityFixed, "c = 0: ∞ is fixed and there are no isometric circles");
    }
    const double r = 1.0 / std::abs(t.c());
    return {CircleOnAxis(-t.d() / t.c(), r, tol), CircleOnAxis(t.a() / t.c(), r, tol)};
}

CircleOnAxis image_circle(const MoebiusMap& t, const CircleOnAxis& circle, double tol) {
    const BoundaryPoint u = apply_boundary(t, BoundaryPoint::real(circle.left()));
    const BoundaryPoint v = apply_boundary(t, BoundaryPoint::real(circle.right()));
    if (u.is_infinity(tol) || v.is_infinity(tol)) {
        throw Error(ErrorCode::PoleOnCircle, "the pole of the map lies on the circle");
    }
    return CircleOnAxis::from_feet(u.value(), v.value(), tol);
}

Geodesic geodesic_through(double phi, double tol) {
    if (!(phi > 0.0 && phi < std::numbers::pi)) {
        throw Error(ErrorCode::InvalidInput, "direction must lie in (0, π)");
    }
    if (std::abs(phi - 0.5 * std::numbers::pi) <= tol) {
        throw Error(ErrorCode::VerticalAxis, "φ = π/2 gives an endpoint at ∞");
    }
    const double t = std::tan(phi);
    return {BoundaryPoint::real(t), BoundaryPoint::real(-1.0 / t)};
}

}  // namespace schottky
