#pragma once

#include <utility>

#include "schottky/boundary_point.hpp"
#include "schottky/error.hpp"
#include "schottky/moebius.hpp"

namespace schottky {

/// Oriented geodesic of the upper half-plane, given by its ideal endpoints.
/// For an axis, `from` is the repelling and `to` the attracting fixed point.
struct Geodesic {
    BoundaryPoint from;
    BoundaryPoint to;
};

/// Euclidean circle centered on the real axis. Its feet center ± radius are
/// the endpoints of the geodesic it closes up. Circles through ∞ are not
/// representable.
class CircleOnAxis {
public:
    CircleOnAxis(double center, double radius, double tol = kDefaultTol);

    /// The circle with the two given finite feet, in either order.
    static CircleOnAxis from_feet(double u, double v, double tol = kDefaultTol);

    double center() const { return center_; }
    double radius() const { return radius_; }
    double left() const { return center_ - radius_; }
    double right() const { return center_ + radius_; }

    /// Strictly inside the open interval (left, right) by more than tol.
    bool contains(const BoundaryPoint& p, double tol = kDefaultTol) const;

private:
    double center_;
    double radius_;
};

/// Orientation of three boundary points: +1 when (p, q, r) occur in increasing
/// order along R then ∞, -1 for the reverse, 0 if two coincide within tol.
int cyclic_order(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r,
                 double tol = kDefaultTol);

using PointPair = std::pair<BoundaryPoint, BoundaryPoint>;

/// True iff the points of `second` separate each other with respect to `first`,
/// i.e. the geodesics spanned by the pairs cross. Throws SharedEndpoint.
bool pairs_linked(const PointPair& first, const PointPair& second, double tol = kDefaultTol);

/// True iff p lies in the open arc from u to v that does not contain w.
/// Throws DegenerateArc when u, v, w are not pairwise distinct.
bool point_in_arc(const BoundaryPoint& p, const BoundaryPoint& u, const BoundaryPoint& v,
                  const BoundaryPoint& w, double tol = kDefaultTol);

/// Open arc of the boundary circle traversed in the positive direction.
struct Arc {
    BoundaryPoint start;
    BoundaryPoint end;

    /// The arc between u and v not containing w, oriented positively.
    static Arc avoiding(const BoundaryPoint& u, const BoundaryPoint& v, const BoundaryPoint& w,
                        double tol = kDefaultTol);
    /// The arc between u and v containing w, oriented positively.
    static Arc through(const BoundaryPoint& u, const BoundaryPoint& v, const BoundaryPoint& w,
                       double tol = kDefaultTol);

    /// Angular length in (0, 2π).
    double length() const;
    bool contains(const BoundaryPoint& p, double tol = kDefaultTol) const;
    /// Point at the given fraction of the arc, measured by the angle parameter
    /// (fraction 1/2 is the chordal midpoint).
    BoundaryPoint point_at(double fraction) const;
};

Geodesic axis(const MoebiusMap& t, double tol = kDefaultTol);

/// Hyperbolic map with repelling fixed point `repelling`, attracting fixed
/// point `attracting` and translation length `length` (multiplier e^{length/2}).
MoebiusMap build_hyperbolic(const BoundaryPoint& repelling, const BoundaryPoint& attracting,
                            double length, double tol = kDefaultTol);

/// Isometric circles |cz+d| = 1 of t and |-cz+a| = 1 of t⁻¹; t maps the first
/// onto the second, exterior to interior. Throws InfinityFixed when c ≈ 0.
std::pair<CircleOnAxis, CircleOnAxis> isometric_circles(const MoebiusMap& t,
                                                        double tol = kDefaultTol);

/// Möbius image of a circle on the axis, computed from the images of its
/// feet. Throws PoleOnCircle when a foot is sent to ∞.
CircleOnAxis image_circle(const MoebiusMap& t, const CircleOnAxis& circle,
                          double tol = kDefaultTol);

/// Geodesic through i with endpoints (tan φ, -cot φ). Throws VerticalAxis at
/// φ = π/2.
Geodesic geodesic_through(double phi, double tol = kDefaultTol);

}  // namespace schottky
