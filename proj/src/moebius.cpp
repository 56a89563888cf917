#include "schottky/moebius.hpp"

#include <cmath>

namespace schottky {

namespace {

Matrix2 canonical_sign(Matrix2 m, double tol) {
    const double tr = m.trace();
    bool negate = false;
    if (tr > tol) {
        negate = false;
    } else if (tr < -tol) {
        negate = true;
    } else {
        for (double e : {m.a, m.b, m.c}) {
            if (std::abs(e) > tol) {
                negate = e < 0.0;
                break;
            }
        }
    }
    if (negate) m = {-m.a, -m.b, -m.c, -m.d};
    return m;
}

Matrix2 adjugate(const Matrix2& m) { return {m.d, -m.b, -m.c, m.a}; }

}  // namespace

MoebiusMap MoebiusMap::normalize(const Matrix2& raw, double tol) {
    const double det = raw.det();
    if (!(det > tol)) {
        throw Error(ErrorCode::NonOrientable, "determinant " + std::to_string(det) + " is not positive");
    }
    const double s = 1.0 / std::sqrt(det);
    MoebiusMap out;
    out.m_ = canonical_sign({raw.a * s, raw.b * s, raw.c * s, raw.d * s}, tol);
    return out;
}

MoebiusMap MoebiusMap::from_unimodular(const Matrix2& m, double tol) {
    MoebiusMap out;
    out.m_ = canonical_sign(m, tol);
    return out;
}

bool MoebiusMap::approx_equal(const MoebiusMap& other, double tol) const {
    return std::abs(m_.a - other.m_.a) <= tol && std::abs(m_.b - other.m_.b) <= tol &&
           std::abs(m_.c - other.m_.c) <= tol && std::abs(m_.d - other.m_.d) <= tol;
}

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::Identity: return "Identity";
        case Kind::Elliptic: return "Elliptic";
        case Kind::Parabolic: return "Parabolic";
        case Kind::Hyperbolic: return "Hyperbolic";
    }
    return "Unknown";
}

MoebiusMap compose(const MoebiusMap& s, const MoebiusMap& t, double tol) {
    return MoebiusMap::from_unimodular(s.matrix() * t.matrix(), tol);
}

MoebiusMap compose(const MoebiusMap& s, const MoebiusMap& t, const MoebiusMap& u, double tol) {
    return MoebiusMap::from_unimodular(s.matrix() * t.matrix() * u.matrix(), tol);
}

MoebiusMap inverse(const MoebiusMap& t, double tol) {
    // The adjugate of a det-1 matrix has det 1 and the same trace.
    return MoebiusMap::from_unimodular(adjugate(t.matrix()), tol);
}

BoundaryPoint apply_boundary(const MoebiusMap& t, const BoundaryPoint& p) {
    const Matrix2& m = t.matrix();
    return BoundaryPoint::projective(m.a * p.x() + m.b * p.y(), m.c * p.x() + m.d * p.y());
}

Kind classify(const MoebiusMap& t, double tol) {
    if (t.approx_equal(MoebiusMap::identity(), tol)) return Kind::Identity;
    const double tr = t.trace();
    if (tr > 2.0 + tol) return Kind::Hyperbolic;
    if (std::abs(tr - 2.0) <= tol) return Kind::Parabolic;
    if (tr < 2.0 - tol) return Kind::Elliptic;
    // Only reachable through NaN entries.
    throw Error(ErrorCode::MarginalTrace, "trace is not comparable with 2");
}

double commutator_trace(const MoebiusMap& s, const MoebiusMap& t) {
    const Matrix2 prod = s.matrix() * t.matrix() * adjugate(s.matrix()) * adjugate(t.matrix());
    return prod.trace();
}

FixedPoints fixed_points(const MoebiusMap& t, double tol) {
    if (classify(t, tol) != Kind::Hyperbolic) {
        throw Error(ErrorCode::NotHyperbolic, "fixed_points needs a hyperbolic map");
    }
    // Fixed points are the eigenvectors; the dominant eigenvalue's eigenvector
    // attracts under iteration.
    Matrix2 m = t.matrix();
    const double tr = m.trace();
    const double root = std::sqrt(tr * tr - 4.0);
    // Roots of λ² - tr λ + 1 without cancellation.
    const double big = 0.5 * (tr + std::copysign(root, tr));
    const double small = 1.0 / big;

    auto eigenvector = [&m](double lambda) {
        // Both (b, λ-a) and (λ-d, c) solve the eigen-equation; take the larger.
        const double x1 = m.b, y1 = lambda - m.a;
        const double x2 = lambda - m.d, y2 = m.c;
        if (std::hypot(x1, y1) >= std::hypot(x2, y2)) return BoundaryPoint::projective(x1, y1);
        return BoundaryPoint::projective(x2, y2);
    };
    return {eigenvector(big), eigenvector(small)};
}

double translation_length(const MoebiusMap& t, double tol) {
    if (classify(t, tol) != Kind::Hyperbolic) {
        throw Error(ErrorCode::NotHyperbolic, "translation_length needs a hyperbolic map");
    }
    return 2.0 * std::acosh(t.trace() / 2.0);
}

}  // namespace schottky
