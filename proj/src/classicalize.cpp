#include "schottky/classicalize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "schottky/halfplane.hpp"
#include "schottky/pair_criteria.hpp"

namespace schottky {

namespace {

constexpr int kFrameCount = 64;
// Tuples with entries beyond this are too tangled to be worth exploring and
// would overflow the visited-set key.
constexpr double kEntryCap = 1e9;

std::string gen_name(std::size_t i) { return "g" + std::to_string(i + 1); }

double trace_sum(std::span<const MoebiusMap> gens) {
    double s = 0.0;
    for (const MoebiusMap& g : gens) s += g.trace();
    return s;
}

bool same_tuple(std::span<const MoebiusMap> x, std::span<const MoebiusMap> y, double tol) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!x[k].approx_equal(y[k], tol)) return false;
    }
    return true;
}

std::optional<std::vector<long long>> tuple_key(std::span<const MoebiusMap> gens) {
    std::vector<long long> key;
    key.reserve(4 * gens.size());
    for (const MoebiusMap& g : gens) {
        for (double e : {g.a(), g.b(), g.c(), g.d()}) {
            if (!(std::abs(e) < kEntryCap)) return std::nullopt;
            key.push_back(std::llround(e * 1e6));
        }
    }
    return key;
}

// Maps taking a boundary point ζ to ∞. The first frame is the identity.
std::vector<MoebiusMap> frames(std::uint64_t seed) {
    std::vector<MoebiusMap> out{MoebiusMap::identity()};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    while (static_cast<int>(out.size()) < kFrameCount) {
        const BoundaryPoint zeta = BoundaryPoint::from_angle(angle(rng));
        if (zeta.is_infinity(1e-6)) continue;
        // z ↦ -1/(z - ζ)
        out.push_back(MoebiusMap::normalize(0.0, -1.0, 1.0, -zeta.value()));
    }
    return out;
}

std::optional<SchottkySystem> isometric_frame_search(std::span<const MoebiusMap> gens,
                                                     std::uint64_t seed, double tol) {
    for (const MoebiusMap& frame : frames(seed)) {
        const MoebiusMap back = inverse(frame, tol);
        try {
            SchottkySystem framed;
            for (const MoebiusMap& g : gens) {
                const MoebiusMap h = compose(frame, g, back, tol);
                const auto [source, target] = isometric_circles(h, tol);
                framed.generators.push_back(h);
                framed.pairs.push_back({source, target});
            }
            if (!passed(verify_classical(framed, tol))) continue;
            SchottkySystem sys;
            sys.generators.assign(gens.begin(), gens.end());
            for (const CirclePair& p : framed.pairs) {
                sys.pairs.push_back({image_circle(back, p.source, tol), image_circle(back, p.target, tol)});
            }
            if (passed(verify_classical(sys, tol))) return sys;
        } catch (const Error&) {
            // ∞ fixed in this frame, or a circle passes through the old ∞.
        }
    }
    return std::nullopt;
}

}  // namespace

std::string NielsenMove::str() const {
    const std::string power = exponent > 0 ? "" : "^-1";
    switch (type) {
        case Type::Invert: return gen_name(i) + " <- " + gen_name(i) + "^-1";
        case Type::Swap: return "swap " + gen_name(i) + " " + gen_name(j);
        case Type::MultiplyRight: return gen_name(i) + " <- " + gen_name(i) + "*" + gen_name(j) + power;
        case Type::MultiplyLeft: return gen_name(i) + " <- " + gen_name(j) + power + "*" + gen_name(i);
    }
    return "?";
}

void apply_move(std::vector<MoebiusMap>& gens, const NielsenMove& move, double tol) {
    if (move.i >= gens.size() || move.j >= gens.size()) throw Error(ErrorCode::BadIndex, "move index");
    switch (move.type) {
        case NielsenMove::Type::Invert: gens[move.i] = inverse(gens[move.i], tol); break;
        case NielsenMove::Type::Swap: std::swap(gens[move.i], gens[move.j]); break;
        case NielsenMove::Type::MultiplyRight: {
            const MoebiusMap other = move.exponent > 0 ? gens[move.j] : inverse(gens[move.j], tol);
            gens[move.i] = compose(gens[move.i], other, tol);
            break;
        }
        case NielsenMove::Type::MultiplyLeft: {
            const MoebiusMap other = move.exponent > 0 ? gens[move.j] : inverse(gens[move.j], tol);
            gens[move.i] = compose(other, gens[move.i], tol);
            break;
        }
    }
}

void apply_move(std::vector<Word>& words, const NielsenMove& move) {
    if (move.i >= words.size() || move.j >= words.size()) throw Error(ErrorCode::BadIndex, "move index");
    switch (move.type) {
        case NielsenMove::Type::Invert: words[move.i] = words[move.i].inverse(); break;
        case NielsenMove::Type::Swap: std::swap(words[move.i], words[move.j]); break;
        case NielsenMove::Type::MultiplyRight: {
            const Word other = move.exponent > 0 ? words[move.j] : words[move.j].inverse();
            words[move.i] = words[move.i] * other;
            break;
        }
        case NielsenMove::Type::MultiplyLeft: {
            const Word other = move.exponent > 0 ? words[move.j] : words[move.j].inverse();
            words[move.i] = other * words[move.i];
            break;
        }
    }
}

std::vector<NielsenNeighbor> nielsen_neighbors(std::span<const MoebiusMap> gens, double tol) {
    for (const MoebiusMap& g : gens) {
        if (classify(g, tol) == Kind::Identity) throw Error(ErrorCode::IdentityGenerator, "identity in tuple");
    }
    const std::size_t r = gens.size();
    std::vector<NielsenMove> moves;
    for (std::size_t i = 0; i < r; ++i) moves.push_back({NielsenMove::Type::Invert, i, i, 1});
    if (r >= 2) {
        for (std::size_t i = 0; i < r; ++i) moves.push_back({NielsenMove::Type::Swap, i, (i + 1) % r, 1});
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            for (auto type : {NielsenMove::Type::MultiplyRight, NielsenMove::Type::MultiplyLeft}) {
                for (int e : {1, -1}) moves.push_back({type, i, j, e});
            }
        }
    }

    std::vector<NielsenNeighbor> out;
    for (const NielsenMove& m : moves) {
        std::vector<MoebiusMap> next(gens.begin(), gens.end());
        apply_move(next, m, tol);
        const bool dup = std::any_of(out.begin(), out.end(), [&](const NielsenNeighbor& n) {
            return same_tuple(n.generators, next, tol);
        });
        if (!dup) out.push_back({std::move(next), m});
    }
    return out;
}

std::optional<SchottkySystem> certify_tuple(std::span<const MoebiusMap> gens, std::uint64_t seed,
                                            double tol) {
    for (const MoebiusMap& g : gens) {
        if (classify(g, tol) != Kind::Hyperbolic) return std::nullopt;
    }
    if (gens.size() == 2) {
        const PairCase pc = pair_case(gens[0], gens[1], tol);
        if (pc.kind == PairCaseKind::Degenerate) return std::nullopt;
        if (pc.kind == PairCaseKind::Intersecting) {
            if (!intersecting_pair_schottky_test(gens[0], gens[1], tol).schottky) return std::nullopt;
        } else {
            try {
                const OrientedPair pair = orient_pair_standard(gens[0], gens[1], tol);
                if (!lemma3_classical_test(pair, tol).classical) return std::nullopt;
                SchottkySystem sys = restore_marking(pair, lemma3_build_circles(pair, tol), tol);
                if (passed(verify_classical(sys, tol))) return sys;
            } catch (const Error& e) {
                if (e.code() == ErrorCode::TestElementNotHyperbolic) return std::nullopt;
                // ConstructionFailed: fall through to the frame search.
            }
        }
    }
    return isometric_frame_search(gens, seed, tol);
}

ClassicalizeResult find_classical_generators(std::span<const MoebiusMap> gens, std::size_t budget,
                                             std::uint64_t seed, double tol) {
    if (gens.empty()) throw Error(ErrorCode::InvalidInput, "empty generating tuple");
    for (const MoebiusMap& g : gens) {
        if (classify(g, tol) != Kind::Hyperbolic) {
            throw Error(ErrorCode::NonHyperbolicGenerator, "every generator must be hyperbolic");
        }
    }

    struct Node {
        std::vector<MoebiusMap> gens;
        std::vector<NielsenMove> path;
        std::vector<Word> words;
    };
    Node root{std::vector<MoebiusMap>(gens.begin(), gens.end()), {}, {}};
    for (std::size_t i = 0; i < gens.size(); ++i) root.words.emplace_back(std::vector<int>{static_cast<int>(i + 1)});

    std::set<std::vector<long long>> seen;
    if (auto key = tuple_key(root.gens)) seen.insert(*key);
    std::vector<Node> frontier{std::move(root)};
    std::size_t visited = 0;

    while (!frontier.empty()) {
        std::stable_sort(frontier.begin(), frontier.end(), [](const Node& x, const Node& y) {
            return trace_sum(x.gens) < trace_sum(y.gens);
        });
        std::vector<Node> next;
        for (Node& node : frontier) {
            if (visited >= budget) return BudgetExhausted{visited};
            ++visited;
            if (auto sys = certify_tuple(node.gens, seed, tol)) {
                return Found{node.gens, std::move(*sys), node.path, node.words, visited};
            }
            for (NielsenNeighbor& nb : nielsen_neighbors(node.gens, tol)) {
                const bool usable = std::all_of(nb.generators.begin(), nb.generators.end(),
                                                [tol](const MoebiusMap& g) {
                                                    return classify(g, tol) == Kind::Hyperbolic;
                                                });
                if (!usable) continue;
                const auto key = tuple_key(nb.generators);
                if (!key || !seen.insert(*key).second) continue;
                Node child{std::move(nb.generators), node.path, node.words};
                child.path.push_back(nb.move);
                apply_move(child.words, nb.move);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return BudgetExhausted{visited};
}

}  // namespace schottky
