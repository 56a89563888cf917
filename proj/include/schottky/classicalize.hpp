#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schottky/moebius.hpp"
#include "schottky/schottky_system.hpp"

namespace schottky {

/// Elementary Nielsen move on a generating tuple (indices 0-based).
struct NielsenMove {
    enum class Type { Invert, Swap, MultiplyRight, MultiplyLeft };

    Type type = Type::Invert;
    std::size_t i = 0;
    std::size_t j = 0;
    int exponent = 1;  // ±1, the power of g_j in a multiplication

    /// Human-readable form with 1-based indices, e.g. "g2 <- g1^-1*g2".
    std::string str() const;
    friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

/// Applies a move: Invert g_i; Swap g_i, g_j; MultiplyRight g_i ← g_i·g_j^e;
/// MultiplyLeft g_i ← g_j^e·g_i.
void apply_move(std::vector<MoebiusMap>& gens, const NielsenMove& move, double tol = kDefaultTol);
void apply_move(std::vector<Word>& words, const NielsenMove& move);

struct NielsenNeighbor {
    std::vector<MoebiusMap> generators;
    NielsenMove move;
};

/// All single inversions, the cyclically adjacent swaps and the 4r(r-1)
/// one-sided multiplications, in that order, with duplicate tuples removed.
/// Throws IdentityGenerator.
std::vector<NielsenNeighbor> nielsen_neighbors(std::span<const MoebiusMap> gens,
                                               double tol = kDefaultTol);

/// Tries to certify one tuple as classical: commutator test or the fixed-point arc test for
/// rank 2, then isometric circles viewed from seeded boundary frames.
std::optional<SchottkySystem> certify_tuple(std::span<const MoebiusMap> gens, std::uint64_t seed,
                                            double tol = kDefaultTol);

struct Found {
    std::vector<MoebiusMap> generators;
    SchottkySystem system;
    std::vector<NielsenMove> path;
    std::vector<Word> words;  // each output generator as a word in the input ones
    std::size_t visited = 0;
};

struct BudgetExhausted {
    std::size_t visited = 0;
};

using ClassicalizeResult = std::variant<Found, BudgetExhausted>;

/// Breadth-first search over Nielsen-equivalent tuples, ordered by
/// (distance, sum of |trace|), until one certifies. `budget` caps the number
/// of tuples examined. Throws NonHyperbolicGenerator.
ClassicalizeResult find_classical_generators(std::span<const MoebiusMap> gens, std::size_t budget,
                                             std::uint64_t seed = 7, double tol = kDefaultTol);

}  // namespace schottky
