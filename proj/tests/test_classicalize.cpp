#include <doctest.h>

#include <algorithm>

#include "schottky/classicalize.hpp"
#include "schottky/constructions.hpp"
#include "test_support.hpp"

using namespace schottky;

namespace {

const NonclassicalExample& example() {
    static const NonclassicalExample ex = nonclassical_pair_example();
    return ex;
}

bool same_tuple(std::span<const MoebiusMap> x, std::span<const MoebiusMap> y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].approx_equal(y[i], 1e-7)) return false;
    return true;
}

}  // namespace

TEST_CASE("nielsen_neighbors") {
    const std::vector<MoebiusMap> pair{example().a, example().ab};
    const auto nb = nielsen_neighbors(pair);
    // 2 inversions + 1 swap + 8 multiplications; the two cyclic swaps coincide.
    CHECK(nb.size() == 11);
    CHECK(nb[0].move.type == NielsenMove::Type::Invert);
    CHECK(nb[2].move.type == NielsenMove::Type::Swap);

    const std::vector<MoebiusMap> one{example().a};
    const auto single = nielsen_neighbors(one);
    REQUIRE(single.size() == 1);
    CHECK(single[0].generators[0].approx_equal(inverse(example().a), 1e-12));

    const std::vector<MoebiusMap> with_id{example().a, MoebiusMap::normalize(1, 0, 0, 1)};
    try {
        nielsen_neighbors(with_id);
        FAIL("expected IdentityGenerator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IdentityGenerator);
    }
}

TEST_CASE("apply_move on words tracks maps") {
    std::vector<MoebiusMap> gens{example().a, example().b};
    std::vector<Word> words{Word({1}), Word({2})};
    const std::vector<NielsenMove> moves{
        {NielsenMove::Type::MultiplyRight, 0, 1, 1},
        {NielsenMove::Type::Invert, 1, 0, 1},
        {NielsenMove::Type::MultiplyLeft, 1, 0, -1},
        {NielsenMove::Type::Swap, 0, 1, 1},
    };
    for (const auto& m : moves) {
        apply_move(gens, m);
        apply_move(words, m);
    }
    const std::vector<MoebiusMap> base{example().a, example().b};
    for (std::size_t i = 0; i < gens.size(); ++i)
        CHECK(evaluate_word(base, words[i]).approx_equal(gens[i], 1e-9));
    CHECK(NielsenMove{NielsenMove::Type::MultiplyLeft, 1, 0, -1}.str() == "g2 <- g1^-1*g2");
}

TEST_CASE("find_classical_generators") {
    const std::vector<MoebiusMap> input{example().a, example().ab};
    const ClassicalizeResult r = find_classical_generators(input, 500);
    REQUIRE(std::holds_alternative<Found>(r));
    const Found& f = std::get<Found>(r);
    CHECK(f.path.size() <= 2);
    CHECK(passed(verify_classical(f.system)));
    for (std::size_t i = 0; i < f.words.size(); ++i)
        CHECK(evaluate_word(input, f.words[i]).approx_equal(f.generators[i], 1e-7));

    const std::vector<MoebiusMap> classical{example().a, example().b};
    const ClassicalizeResult r0 = find_classical_generators(classical, 10);
    REQUIRE(std::holds_alternative<Found>(r0));
    CHECK(std::get<Found>(r0).path.empty());

    const ClassicalizeResult none = find_classical_generators(input, 0);
    CHECK(std::holds_alternative<BudgetExhausted>(none));
}

TEST_CASE("property: classicalize is deterministic and sound on scrambled tuples") {
    const SchottkySystem base = standard_group(1, 2);
    std::mt19937_64 rng(21);
    for (int k = 0; k < 10; ++k) {
        std::vector<MoebiusMap> gens = base.generators;
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        for (int s = 0; s < 2; ++s) {
            const std::size_t i = pick(rng);
            std::size_t j = pick(rng);
            if (i == j) j = (i + 1) % gens.size();
            apply_move(gens, {NielsenMove::Type::MultiplyRight, i, j, s % 2 ? -1 : 1});
        }
        const ClassicalizeResult a = find_classical_generators(gens, 2000, 7);
        const ClassicalizeResult b = find_classical_generators(gens, 2000, 7);
        REQUIRE(a.index() == b.index());
        if (const Found* fa = std::get_if<Found>(&a)) {
            const Found& fb = std::get<Found>(b);
            CHECK(fa->path == fb.path);
            CHECK(same_tuple(fa->generators, fb.generators));
            CHECK(passed(verify_classical(fa->system)));
            for (std::size_t i = 0; i < fa->words.size(); ++i)
                CHECK(evaluate_word(gens, fa->words[i]).approx_equal(fa->generators[i], 1e-6));
        }
    }
}
