#include "schottky/schottky_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace schottky {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NotHyperbolic: return "not_hyperbolic";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::Pairing: return "pairing";
        case ViolationKind::Direction: return "direction";
    }
    return "unknown";
}

namespace {

struct Interval {
    double left;
    double right;
    std::size_t generator;
    bool is_target;
};

std::vector<Interval> sorted_intervals(const SchottkySystem& sys) {
    std::vector<Interval> out;
    out.reserve(2 * sys.pairs.size());
    for (std::size_t i = 0; i < sys.pairs.size(); ++i) {
        out.push_back({sys.pairs[i].source.left(), sys.pairs[i].source.right(), i, false});
        out.push_back({sys.pairs[i].target.left(), sys.pairs[i].target.right(), i, true});
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) {
        return x.left < y.left || (x.left == y.left && x.right < y.right);
    });
    return out;
}

double real_chordal(double s, double t) {
    return chordal_distance(BoundaryPoint::real(s), BoundaryPoint::real(t));
}

void check_shape(const SchottkySystem& sys) {
    if (sys.generators.empty()) throw Error(ErrorCode::InvalidInput, "system has no generators");
    if (sys.generators.size() != sys.pairs.size()) {
        throw Error(ErrorCode::InvalidInput, "number of circle pairs differs from number of generators");
    }
}

}  // namespace

Verification verify_classical(const SchottkySystem& sys, double tol) {
    check_shape(sys);
    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        if (classify(sys.generators[i], tol) != Kind::Hyperbolic) {
            return Violation{ViolationKind::NotHyperbolic, i, "generator is not hyperbolic"};
        }
    }

    Certificate cert;
    cert.margin = std::numeric_limits<double>::infinity();
    const std::vector<Interval> ivs = sorted_intervals(sys);
    for (std::size_t k = 0; k + 1 < ivs.size(); ++k) {
        const double gap = ivs[k + 1].left - ivs[k].right;
        if (!(gap > tol)) {
            std::ostringstream msg;
            msg << "circle of generator " << ivs[k].generator + 1 << " meets circle of generator "
                << ivs[k + 1].generator + 1 << " (gap " << gap << ")";
            return Violation{ViolationKind::Overlap, ivs[k + 1].generator, msg.str()};
        }
        cert.margin = std::min(cert.margin, gap);
    }

    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        const MoebiusMap& gen = sys.generators[i];
        const CirclePair& pair = sys.pairs[i];

        if (!pair.target.contains(apply_boundary(gen, BoundaryPoint::infinity()), tol)) {
            return Violation{ViolationKind::Direction, i,
                             "image of ∞ is not inside the paired circle"};
        }

        double residual = 0.0;
        try {
            const CircleOnAxis image = image_circle(gen, pair.source, tol);
            residual = std::max(real_chordal(image.left(), pair.target.left()),
                                real_chordal(image.right(), pair.target.right()));
        } catch (const Error&) {
            return Violation{ViolationKind::Pairing, i, "image of the source circle is unbounded"};
        }
        if (residual > tol) {
            std::ostringstream msg;
            msg << "image of the source circle misses the target by " << residual;
            return Violation{ViolationKind::Pairing, i, msg.str()};
        }
        cert.pairing_residual = std::max(cert.pairing_residual, residual);
    }
    return cert;
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (letters_[k] == 0) throw Error(ErrorCode::BadIndex, "letter 0 is not a generator");
        if (k > 0 && letters_[k] == -letters_[k - 1]) {
            throw Error(ErrorCode::NotReduced, "adjacent letters cancel");
        }
    }
}

Word Word::reduce(std::span<const int> letters) {
    std::vector<int> out;
    for (int l : letters) {
        if (l == 0) throw Error(ErrorCode::BadIndex, "letter 0 is not a generator");
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word(std::move(out));
}

Word Word::parse(const std::string& text) {
    std::vector<int> letters;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, '.')) {
        if (token.empty()) throw Error(ErrorCode::InvalidInput, "empty letter in word '" + text + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw Error(ErrorCode::InvalidInput, "bad letter '" + token + "'");
        letters.push_back(value);
    }
    return Word(std::move(letters));
}

Word Word::inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& l : out) l = -l;
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string out;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k > 0) out += '.';
        out += std::to_string(letters_[k]);
    }
    return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
    std::vector<int> joined = lhs.letters_;
    joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word::reduce(joined);
}

MoebiusMap evaluate_word(std::span<const MoebiusMap> generators, const Word& word, double tol) {
    Matrix2 acc;
    for (int l : word.letters()) {
        const std::size_t idx = static_cast<std::size_t>(std::abs(l));
        if (idx > generators.size()) {
            throw Error(ErrorCode::BadIndex, "letter " + std::to_string(l) + " exceeds the rank");
        }
        const MoebiusMap g = l > 0 ? generators[idx - 1] : inverse(generators[idx - 1], tol);
        acc = acc * g.matrix();
    }
    return MoebiusMap::from_unimodular(acc, tol);
}

std::vector<LimitSample> limit_set_sample(const SchottkySystem& sys, int depth, double tol) {
    if (depth < 0) throw Error(ErrorCode::InvalidInput, "depth must be non-negative");
    if (!passed(verify_classical(sys, tol))) {
        throw Error(ErrorCode::NotCertified, "limit_set_sample needs a certified system");
    }
    const int rank = static_cast<int>(sys.rank());
    std::vector<int> alphabet;
    for (int i = 1; i <= rank; ++i) {
        alphabet.push_back(-i);
        alphabet.push_back(i);
    }
    std::sort(alphabet.begin(), alphabet.end());

    auto base_circle = [&sys](int letter) {
        const CirclePair& p = sys.pairs[static_cast<std::size_t>(std::abs(letter) - 1)];
        return letter > 0 ? p.target : p.source;
    };
    auto letter_map = [&sys, tol](int letter) {
        const MoebiusMap& g = sys.generators[static_cast<std::size_t>(std::abs(letter) - 1)];
        return letter > 0 ? g : inverse(g, tol);
    };

    struct Node {
        std::vector<int> letters;
        MoebiusMap map;  // evaluation of the whole word
    };
    std::vector<LimitSample> out;
    std::vector<Node> level{Node{{}, MoebiusMap::identity()}};
    for (int len = 1; len <= depth; ++len) {
        std::vector<Node> next;
        next.reserve(level.size() * alphabet.size());
        for (const Node& node : level) {
            for (int l : alphabet) {
                if (!node.letters.empty() && node.letters.back() == -l) continue;
                // Deep word circles are far smaller than tol; only require r > 0.
                const CircleOnAxis circle = image_circle(node.map, base_circle(l), 0.0);
                std::vector<int> letters = node.letters;
                letters.push_back(l);
                out.push_back({Word(letters), BoundaryPoint::real(circle.center()), circle});
                next.push_back({std::move(letters), compose(node.map, letter_map(l), tol)});
            }
        }
        level = std::move(next);
    }
    // Generation is already (length, lexicographic) ordered; keep the contract explicit.
    std::stable_sort(out.begin(), out.end(), [](const LimitSample& x, const LimitSample& y) {
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return x.word.letters() < y.word.letters();
    });
    return out;
}

int rank_genus_relation(int n, int h) {
    if (n < 0 || h < 1) throw Error(ErrorCode::InvalidSurface, "need n >= 0 and h >= 1");
    if (n == 0 && h == 1) throw Error(ErrorCode::InvalidSurface, "a disc is not a Schottky quotient");
    return 2 * n + h - 1;
}

QuotientTopology count_quotient_boundaries(const SchottkySystem& sys, double tol) {
    if (!passed(verify_classical(sys, tol))) {
        throw Error(ErrorCode::NotCertified, "count_quotient_boundaries needs a certified system");
    }
    const std::vector<Interval> ivs = sorted_intervals(sys);
    const std::size_t n_arcs = ivs.size();

    // Arc k runs from the right foot of interval k to the left foot of
    // interval k+1 (cyclically; the last arc passes through ∞). The end of
    // arc k is glued, by the pairing of the circle it abuts, to the start of
    // another arc; following end -> glued start traces one boundary curve.
    auto interval_of = [&ivs](std::size_t gen, bool target) {
        for (std::size_t k = 0; k < ivs.size(); ++k) {
            if (ivs[k].generator == gen && ivs[k].is_target == target) return k;
        }
        throw Error(ErrorCode::InvalidInput, "circle missing from the interval list");
    };

    std::vector<std::size_t> next_arc(n_arcs);
    for (std::size_t k = 0; k < n_arcs; ++k) {
        const Interval& abutting = ivs[(k + 1) % n_arcs];
        const MoebiusMap& gen = sys.generators[abutting.generator];
        const MoebiusMap g = abutting.is_target ? inverse(gen, tol) : gen;
        const std::size_t partner = interval_of(abutting.generator, !abutting.is_target);

        // Orientation-preserving pairing sends the left foot of one circle to
        // the right foot of its partner, where the next arc starts.
        const BoundaryPoint image = apply_boundary(g, BoundaryPoint::real(abutting.left));
        const double to_right = chordal_distance(image, BoundaryPoint::real(ivs[partner].right));
        if (to_right > std::max(tol, 1e-12) * 1e3) {
            throw Error(ErrorCode::NotCertified, "side pairing does not match circle feet");
        }
        next_arc[k] = partner;  // arc `partner` starts at the right foot of interval `partner`
    }

    std::vector<bool> seen(n_arcs, false);
    int cycles = 0;
    for (std::size_t k = 0; k < n_arcs; ++k) {
        if (seen[k]) continue;
        ++cycles;
        for (std::size_t j = k; !seen[j]; j = next_arc[j]) seen[j] = true;
    }

    QuotientTopology topo;
    topo.rank = static_cast<int>(sys.rank());
    topo.boundaries = cycles;
    const int twice_genus = topo.rank + 1 - cycles;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
        throw Error(ErrorCode::ParityError, "r + 1 - h = " + std::to_string(twice_genus) + " is not even");
    }
    topo.genus = twice_genus / 2;
    return topo;
}

}  // namespace schottky
