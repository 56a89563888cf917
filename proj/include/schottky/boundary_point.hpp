#pragma once

#include <cmath>
#include <limits>

namespace schottky {

// A point of the boundary circle R ∪ {∞}, stored as a unit projective pair
// (x : y) with y >= 0. ∞ is (1 : 0).
class BoundaryPoint {
public:
    BoundaryPoint() : x_(0.0), y_(1.0) {}

    static BoundaryPoint infinity() { return BoundaryPoint(1.0, 0.0, Raw{}); }

    // Finite real, or ±inf for the point at infinity.
    static BoundaryPoint real(double t) {
        if (std::isinf(t)) return infinity();
        return projective(t, 1.0);
    }

    // Any nonzero pair; the caller guarantees (x, y) != (0, 0).
    static BoundaryPoint projective(double x, double y) {
        double n = std::hypot(x, y);
        x /= n;
        y /= n;
        if (y < 0.0 || (y == 0.0 && x < 0.0)) {
            x = -x;
            y = -y;
        }
        return BoundaryPoint(x, y, Raw{});
    }

    // Angle parameter on (-π, π]; 0 maps to 0 and ∞ to π. Increases with the
    // cyclic order of R ∪ {∞}.
    static BoundaryPoint from_angle(double theta) {
        return projective(std::sin(theta / 2.0), std::cos(theta / 2.0));
    }

    double x() const { return x_; }
    double y() const { return y_; }

    bool is_infinity(double tol = 1e-15) const { return std::abs(y_) <= tol; }

    // The affine coordinate x/y; +inf for the point at infinity.
    double value() const {
        if (y_ == 0.0) return std::numeric_limits<double>::infinity();
        return x_ / y_;
    }

    double angle() const { return 2.0 * std::atan2(x_, y_); }

private:
    struct Raw {};
    BoundaryPoint(double x, double y, Raw) : x_(x), y_(y) {}

    double x_;
    double y_;
};

// Chordal distance |sin(Δθ/2)|: scale-free, bounded by 1, ∞ is an ordinary point.
inline double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
    return std::abs(p.x() * q.y() - q.x() * p.y());
}

inline bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
    return chordal_distance(p, q) <= tol;
}

}  // namespace schottky
