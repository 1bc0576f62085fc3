#include "doctest.h"
#include "fixtures.hpp"
#include "gcb/graymonoid.hpp"

using namespace gcb;

namespace {

const FiniteAbelianGroup Z2({2}), Z4({4});

GCrossedPointedCategory strict_instance() {
    auto G = make_cyclic(2);
    return zest(trivial_abelian_cocycle(Z2, Z4), G, fx::cochain(G, Z2, 2, {{{1, 1}, 1}}), Cochain(G, Z4, 3));
}

}  // namespace

TEST_CASE("trivial C gives the trivial Gray-monoid") {
    auto C = make_trivial_gcrossed(make_dihedral(3), Z2);
    auto M = from_gcrossed(C);
    CHECK(verify_gray(M).ok());
    for (int v : M.phi) CHECK(v == 0);
    CHECK(to_gcrossed(M) == C);
}

TEST_CASE("hom sets match graded pieces") {
    auto C = strict_instance();
    auto M = from_gcrossed(C);
    const auto& G = C.G;
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h) {
            int homs = 0;
            for (int x = 0; x < M.labels; ++x) homs += M.tgt(M.cell(g, x)) == h;
            CHECK(homs == static_cast<int>(C.objects_of_grade(G.mul(h, G.inv(g))).size()));
        }
}

TEST_CASE("non-strict input is rejected") {
    auto G = make_cyclic(2);
    auto C = zest(trivial_abelian_cocycle(Z2, Z4), G, Cochain(G, Z2, 2), fx::cochain(G, Z4, 3, {{{1, 1, 1}, 2}}));
    CHECK_THROWS_AS(from_gcrossed(C), NotStrict);
    CHECK_THROWS_AS(roundtrip_check(C), NotStrict);
}

TEST_CASE("round trip on the nose") {
    auto C = strict_instance();
    auto M = from_gcrossed(C);
    CHECK(verify_gray(M).ok());
    auto back = to_gcrossed(M);
    CHECK(back == C);
    CHECK(verify_all(back).ok());
    CHECK(is_strict(back));
    CHECK(from_gcrossed(back) == M);
    auto rt = roundtrip_check(C);
    CHECK(rt.functor_report.ok());
    CHECK(rt.recovered == C);
}

TEST_CASE("differences are localized") {
    auto C = strict_instance();
    auto back = to_gcrossed(from_gcrossed(C));
    auto D = C;
    D.c(3, 1) = Z4.add(D.c(3, 1), 2);
    auto diff = first_difference(back, D);
    REQUIRE(diff);
    CHECK(*diff == "braid[3,1]: 0 vs 2");
    CHECK_FALSE(first_difference(back, C));
}

TEST_CASE("bumped interchanger") {
    auto M = from_gcrossed(strict_instance());
    const int x = M.cell(0, 3), y = M.cell(0, 1);
    M.phi[x * M.cells() + y] = Z4.add(M.ph(x, y), 1);
    VerifyOptions o;
    o.exhaustive = true;
    Report r = verify_gray(M, o);
    CHECK((r.has("C4") || r.has("C5")));
    CHECK_THROWS_AS(to_gcrossed(M), GrayAxiomFailure);
    CHECK_FALSE(verify_all(to_gcrossed_unchecked(M)).ok());
}
