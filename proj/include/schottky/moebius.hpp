#pragma once

#include <array>
#include <string_view>

#include "schottky/boundary_point.hpp"
#include "schottky/error.hpp"

namespace schottky {

/// Raw 2×2 real matrix [a, b; c, d], row-major.
struct Matrix2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    friend Matrix2 operator*(const Matrix2& s, const Matrix2& t) {
        return {s.a * t.a + s.b * t.c, s.a * t.b + s.b * t.d,
                s.c * t.a + s.d * t.c, s.c * t.b + s.d * t.d};
    }
};

/// Orientation-preserving real Möbius map z ↦ (az+b)/(cz+d), stored with
/// det = 1 and a canonical sign so that ±M have one representative.
///
/// Canonical sign: trace > tol is kept; trace < -tol is negated; otherwise the
/// first of (a, b, c) whose magnitude exceeds tol is made positive.
class MoebiusMap {
public:
    MoebiusMap() = default;

    static MoebiusMap identity() { return MoebiusMap(); }

    /// Scales by 1/sqrt(det) and applies the canonical sign. Throws
    /// NonOrientable when det <= tol.
    static MoebiusMap normalize(const Matrix2& raw, double tol = kDefaultTol);
    static MoebiusMap normalize(double a, double b, double c, double d, double tol = kDefaultTol) {
        return normalize(Matrix2{a, b, c, d}, tol);
    }
    /// Canonical sign only. For products of normalized maps, whose determinant
    /// is 1 by construction but cannot be recomputed accurately once the
    /// entries are large.
    static MoebiusMap from_unimodular(const Matrix2& m, double tol = kDefaultTol);

    double a() const { return m_.a; }
    double b() const { return m_.b; }
    double c() const { return m_.c; }
    double d() const { return m_.d; }
    const Matrix2& matrix() const { return m_; }

    double det() const { return m_.det(); }
    /// Unsigned trace |a+d|; the sign of a PSL(2,R) trace is not meaningful.
    double trace() const { return std::abs(m_.trace()); }

    bool approx_equal(const MoebiusMap& other, double tol = kDefaultTol) const;

private:
    Matrix2 m_;
};

enum class Kind { Identity, Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(Kind kind);

/// z ↦ s(t(z)).
MoebiusMap compose(const MoebiusMap& s, const MoebiusMap& t, double tol = kDefaultTol);
MoebiusMap compose(const MoebiusMap& s, const MoebiusMap& t, const MoebiusMap& u,
                   double tol = kDefaultTol);
MoebiusMap inverse(const MoebiusMap& t, double tol = kDefaultTol);

/// Projective action on R ∪ {∞}; poles go to ∞ without any division.
BoundaryPoint apply_boundary(const MoebiusMap& t, const BoundaryPoint& p);

Kind classify(const MoebiusMap& t, double tol = kDefaultTol);

/// Signed trace of the commutator s t s⁻¹ t⁻¹. Independent of the sign
/// representatives of s and t, so it is well defined on PSL(2,R).
double commutator_trace(const MoebiusMap& s, const MoebiusMap& t);

struct FixedPoints {
    BoundaryPoint attracting;
    BoundaryPoint repelling;
};

/// Throws NotHyperbolic unless classify(t) == Hyperbolic.
FixedPoints fixed_points(const MoebiusMap& t, double tol = kDefaultTol);

/// 2·arccosh(|a+d|/2). Throws NotHyperbolic.
double translation_length(const MoebiusMap& t, double tol = kDefaultTol);

}  // namespace schottky
