#pragma once

#include <optional>
#include <string>

#include "schottky/halfplane.hpp"
#include "schottky/moebius.hpp"
#include "schottky/schottky_system.hpp"

namespace schottky {

enum class PairCaseKind { Intersecting, Disjoint, Degenerate };

std::string_view to_string(PairCaseKind kind);

struct PairCase {
    PairCaseKind kind;
    std::string reason;  // set for Degenerate: "same axis" or "shared endpoint"
};

/// Whether the axes of two hyperbolic maps cross. Throws NotHyperbolic.
PairCase pair_case(const MoebiusMap& a, const MoebiusMap& b, double tol = kDefaultTol);

struct CommutatorVerdict {
    bool schottky = false;
    double commutator_trace = 0.0;  // signed trace of A B A⁻¹ B⁻¹
    Kind commutator_kind = Kind::Identity;
    std::string reason;             // "parabolic commutator" / "elliptic commutator"

    // Consequences when schottky: the quotient is a one-holed torus and the
    // group is classical on every generating pair.
    static constexpr std::string_view quotient_surface = "one-holed torus";
};

/// Crossing axes: ⟨A, B⟩ is free, discrete and purely hyperbolic iff the
/// commutator is hyperbolic. Throws WrongCase if the axes do not cross.
CommutatorVerdict intersecting_pair_schottky_test(const MoebiusMap& a, const MoebiusMap& b,
                                                  double tol = kDefaultTol);

/// A disjoint-axes pair with the attracting fixed points adjacent: the open arc
/// between afp(first) and afp(second) that avoids rfp(first) contains no
/// repelling fixed point.
struct OrientedPair {
    MoebiusMap first;
    MoebiusMap second;
    bool inverted_first = false;
    bool inverted_second = false;
};

bool is_standard_orientation(const MoebiusMap& a, const MoebiusMap& b, double tol = kDefaultTol);

/// Tries no inversion, then inverting only the second, only the first, both.
/// Throws WrongCase (crossing axes) or Degenerate (shared endpoint).
OrientedPair orient_pair_standard(const MoebiusMap& a, const MoebiusMap& b,
                                  double tol = kDefaultTol);

struct Lemma3Result {
    bool classical = false;
    FixedPoints test_fixed_points;  // of second⁻¹ · first
};

/// Classical on ⟨A, B⟩ iff both fixed points of B⁻¹A lie in the open arc
/// between rfp(A) and rfp(B) that avoids the attracting fixed points.
/// Throws NotStandardOrientation or TestElementNotHyperbolic.
Lemma3Result lemma3_classical_test(const OrientedPair& pair, double tol = kDefaultTol);

/// Builds and certifies circles (C_A, C'_A), (C_B, C'_B) for a pair that passes
/// the test. The returned system is marked by (pair.first, pair.second).
/// Throws ConstructionFailed if the test fails or no candidate certifies.
SchottkySystem lemma3_build_circles(const OrientedPair& pair, double tol = kDefaultTol);

/// Re-marks a system built for an oriented pair onto the original generators:
/// an inverted generator takes its circles in swapped roles.
SchottkySystem restore_marking(const OrientedPair& pair, const SchottkySystem& oriented,
                               double tol = kDefaultTol);

/// Labeling under which the non-classicality separation was observed: the
/// roles (X, Y) = (A, B) or (B, A), each possibly inverted.
struct Theorem4Certificate {
    bool swapped = false;
    bool inverted_first = false;
    bool inverted_second = false;
    BoundaryPoint separation_point;  // attracting fixed point of Y X⁻¹

    /// E.g. "(B, A^-1)" in terms of the input names A and B.
    std::string labeling() const;
};

/// Searches the 8 labelings for one where afp(Y X⁻¹) lies in the open arc
/// between the fixed points of X that avoids the fixed points of Y. A hit
/// certifies that the pair cannot be classical. Throws WrongCase.
std::optional<Theorem4Certificate> theorem4_separation_certificate(const MoebiusMap& a,
                                                                   const MoebiusMap& b,
                                                                   double tol = kDefaultTol);

}  // namespace schottky
