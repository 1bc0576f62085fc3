#include "doctest.h"
#include "gcb/crossed_monoid.hpp"

using namespace gcb;

TEST_CASE("a group is a crossed monoid") {
    for (const auto& G : {make_cyclic(4), make_dihedral(3), make_dihedral(4)}) CHECK(verify(group_as_crossed_monoid(G)).ok());
}

TEST_CASE("trivial G forces commutativity") {
    // M_e = the monoid S3 with trivial G: crossed commutation is plain commutativity
    auto S3 = make_dihedral(3);
    GCrossedMonoid M;
    M.G = make_trivial();
    M.n = 6;
    M.grade.assign(6, 0);
    M.mult.clear();
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) M.mult.push_back(S3.mul(x, y));
    M.unit = 0;
    M.act = {0, 1, 2, 3, 4, 5};
    Report r = verify(M);
    CHECK(r.has("crossed-commutation"));
    CHECK_FALSE(is_commutative(M, 0));

    auto Z6 = group_as_crossed_monoid(make_cyclic(6));
    CHECK(is_commutative(Z6, 0));
}

TEST_CASE("broken action") {
    auto M = group_as_crossed_monoid(make_dihedral(3));
    std::swap(M.act[3 * M.n + 1], M.act[3 * M.n + 2]);  // s acts trivially on rotations
    CHECK_FALSE(verify(M).ok());
}
