#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schottky/halfplane.hpp"
#include "schottky/moebius.hpp"

namespace schottky {

/// The circles paired by one generator: it sends the exterior of `source`
/// onto the interior of `target`.
struct CirclePair {
    CircleOnAxis source;
    CircleOnAxis target;
};

/// Marked generators A_1..A_g with their paired circles (C_i, C'_i).
struct SchottkySystem {
    std::vector<MoebiusMap> generators;
    std::vector<CirclePair> pairs;

    std::size_t rank() const { return generators.size(); }
};

struct Certificate {
    double margin = 0.0;            ///< smallest gap between the 2g circle intervals
    double pairing_residual = 0.0;  ///< largest chordal foot mismatch of A_i(C_i) vs C'_i
};

enum class ViolationKind { NotHyperbolic, Overlap, Pairing, Direction };

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::size_t index = 0;  ///< generator index (0-based) the failure refers to
    std::string detail;
};

using Verification = std::variant<Certificate, Violation>;

inline bool passed(const Verification& v) { return std::holds_alternative<Certificate>(v); }

/// Checks the classical Schottky ping-pong conditions: disjoint intervals,
/// A_i(C_i) = C'_i, and A_i(∞) strictly inside C'_i. Throws InvalidInput if the
/// number of circle pairs differs from the number of generators.
Verification verify_classical(const SchottkySystem& sys, double tol = kDefaultTol);

/// Reduced word in the free group on the marked generators. Letters are
/// signed 1-based generator indices.
class Word {
public:
    Word() = default;
    /// Throws NotReduced if two adjacent letters cancel, BadIndex on a 0 letter.
    explicit Word(std::vector<int> letters);

    /// Free reduction of an arbitrary letter sequence.
    static Word reduce(std::span<const int> letters);
    static Word parse(const std::string& text);

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    /// Signed indices joined by '.', e.g. "1.-2.1"; the empty word is "".
    std::string str() const;

    friend Word operator*(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// Product of generators/inverses in word order (leftmost letter applied last).
MoebiusMap evaluate_word(std::span<const MoebiusMap> generators, const Word& word,
                         double tol = kDefaultTol);

struct LimitSample {
    Word word;
    BoundaryPoint point;
    CircleOnAxis circle;
};

/// Nested circles for every reduced word of length 1..depth. The circle of
/// w = s_1..s_k is (s_1..s_{k-1})(D_{s_k}) with D_{+i} = C'_i and D_{-i} = C_i;
/// the sample point is its center. Sorted by (length, letters). Throws
/// NotCertified if the system fails verification.
std::vector<LimitSample> limit_set_sample(const SchottkySystem& sys, int depth,
                                          double tol = kDefaultTol);

/// r = 2n + h - 1 for the surface of genus n with h boundary curves.
int rank_genus_relation(int n, int h);

struct QuotientTopology {
    int rank = 0;        ///< r
    int genus = 0;       ///< n
    int boundaries = 0;  ///< h
};

/// Counts the cycles of boundary arcs of R \ (circle intervals) under the side
/// pairings. Throws NotCertified or ParityError.
QuotientTopology count_quotient_boundaries(const SchottkySystem& sys, double tol = kDefaultTol);

}  // namespace schottky
