#include <random>

#include "doctest.h"
#include "gcb/pointed_cat.hpp"

using namespace gcb;

namespace {

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

AbelianThreeCocycle with_alpha(int m, int a111) {
    AbelianThreeCocycle ac(FiniteAbelianGroup({2}), FiniteAbelianGroup({m}));
    ac.al(1, 1, 1) = a111;
    return ac;
}

}  // namespace

TEST_CASE("pentagon") {
    CHECK(check_pentagon(trivial_abelian_cocycle(FiniteAbelianGroup({2}), FiniteAbelianGroup({4}))).ok());
    CHECK(check_pentagon(with_alpha(2, 1)).ok());
    Report r = check_pentagon(with_alpha(4, 1));
    REQUIRE_FALSE(r.ok());
    bool at_1111 = false;
    for (const auto& f : r.failures)
        if (f.witness == std::vector<int>{1, 1, 1, 1}) {
            at_1111 = true;
            CHECK(f.axiom == "pentagon");
            CHECK(f.defect == 2);
        }
    CHECK(at_1111);
}

TEST_CASE("hexagons") {
    FiniteAbelianGroup A({2}), K({4});
    CHECK(check_hexagons(trivial_abelian_cocycle(A, K)).ok());
    CHECK_FALSE(check_hexagons(bicharacter(A, K, {0, 0, 0, 1})).ok());
    CHECK(check_hexagons(semion()).ok());
    CHECK(check_pentagon(semion()).ok());
    CHECK(is_bilinear(A, K, {0, 0, 0, 2}));
    CHECK_FALSE(is_bilinear(A, K, {0, 0, 0, 1}));
}

TEST_CASE("words") {
    auto w = Word::join(Word::join(Word::leaf(1), Word::leaf(1)), Word::leaf(1));
    auto v = Word::join(Word::leaf(1), Word::join(Word::leaf(1), Word::leaf(1)));
    auto ops = monoidal_ops(semion());
    CHECK(reassociate(ops, w, w) == 0);
    CHECK(reassociate(ops, w, v) == semion().al(1, 1, 1));
    CHECK(w == Word::left_nested({1, 1, 1}));
    CHECK(v == Word::right_nested({1, 1, 1}));
    CHECK(word_object(ops, w) == 1);
    CHECK_THROWS_AS(reassociate(ops, w, Word::left_nested({1, 0, 1})), LeafMismatch);
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<long>(all_parenthesizations(std::vector<int>(n, 0)).size()) == catalan(n - 1));
}

TEST_CASE("path independence") {
    auto ops = monoidal_ops(semion());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + rng() % 5;
        std::vector<int> leaves(n);
        for (auto& x : leaves) x = rng() % 2;
        auto all = all_parenthesizations(leaves);
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        auto p = path_independent_scalar(ops, a, b);
        REQUIRE(p);
        CHECK(*p == reassociate(ops, a, b));
        CHECK(*p == random_path_scalar(ops, a, b, rng()));
    }
    // a non-cocycle associator makes some pair of paths disagree
    auto bad = monoidal_ops(with_alpha(4, 1));
    CHECK_FALSE(path_independent_scalar(bad, Word::left_nested({1, 1, 1, 1}), Word::right_nested({1, 1, 1, 1})));
}

TEST_CASE("right duals") {
    for (const auto& ac : {semion(), with_alpha(2, 1), trivial_abelian_cocycle(FiniteAbelianGroup({3}), FiniteAbelianGroup({3}))}) {
        auto ops = monoidal_ops(ac);
        for (int x = 0; x < ac.A.order; ++x) {
            auto d = right_dual(ac, x);
            CHECK(ac.A.add(x, d.dual) == 0);
            CHECK(snake_defects(ops, d) == std::pair{0, 0});
            CHECK(check_snake(ops, d));
        }
    }
}
