#pragma once

#include <optional>
#include <utility>

#include "schottky/moebius.hpp"
#include "schottky/schottky_system.hpp"

namespace schottky {

/// First translation length tried by the automatic growth loop: 2 ln 8.
double auto_start_length();

/// Certified classical group G_{n,h} of rank 2n+h-1 whose quotient has genus n
/// and h boundary curves. With `length` unset the translation length starts at
/// 2 ln 8 and doubles until the isometric circles certify (at most 40 times).
///
/// Layout: 2n axes through i with directions evenly spread, then h-1 nested
/// axes inside the first gap between adjacent axis endpoints (or inside
/// (-1, 1) when n = 0). Every generator pairs its isometric circles.
///
/// Throws InvalidSurface for (0, 1), ConstructionFailed if an explicit length
/// does not certify, AutoGrowthExhausted if growth never certifies.
SchottkySystem standard_group(int n, int h, std::optional<double> length = std::nullopt,
                              double tol = kDefaultTol);

/// A = diag(λ, 1/λ), B = [cosh t, sinh t; sinh t, cosh t], returned only when the
/// commutator test says the group is Schottky. Throws NotSchottky otherwise.
std::pair<MoebiusMap, MoebiusMap> one_holed_torus_pair(double lambda, double t,
                                                       double tol = kDefaultTol);

struct NonclassicalExample {
    MoebiusMap a;
    MoebiusMap ab;
    MoebiusMap b;
    double length = 0.0;     // translation length actually used
    SchottkySystem witness;  // certified classical system on (A, B)
};

/// The pair (A, AB) generating the certified classical group ⟨A, B⟩ with
/// A, B hyperbolic along (-3 → -1) and (3 → 1). The group is Schottky but not
/// classical on (A, AB). Default length 2 ln 10; grows like standard_group if
/// the witness does not certify.
NonclassicalExample nonclassical_pair_example(std::optional<double> length = std::nullopt,
                                              double tol = kDefaultTol);

}  // namespace schottky
