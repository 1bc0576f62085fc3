#include <algorithm>
#include <set>

#include "doctest.h"
#include "gcb/fingroup.hpp"

using namespace gcb;

namespace {

// independent associativity/identity/inverse scan
bool brute_force_group(const FiniteGroup& G) {
    const int n = G.order;
    for (int a = 0; a < n; ++a) {
        if (G.mul(0, a) != a || G.mul(a, 0) != a) return false;
        bool has_inv = false;
        for (int b = 0; b < n; ++b) has_inv |= G.mul(a, b) == 0 && G.mul(b, a) == 0;
        if (!has_inv) return false;
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cyclic groups") {
    auto Z1 = make_cyclic(1);
    CHECK(Z1.order == 1);
    CHECK(Z1.identity == 0);
    CHECK(make_cyclic(2).table == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    auto Z6 = make_cyclic(6);
    CHECK(check_group_axioms(Z6.table).ok());
    CHECK(brute_force_group(Z6));
    CHECK(Z6.is_abelian());
}

TEST_CASE("dihedral groups") {
    auto D3 = make_dihedral(3);
    CHECK(D3.order == 6);
    CHECK(check_group_axioms(D3.table).ok());
    CHECK(brute_force_group(D3));
    CHECK_FALSE(D3.is_abelian());
    const int r = 1, s = 3;
    CHECK(D3.mul(s, D3.mul(r, s)) == D3.inv(r));  // s r s^-1 = r^-1
    CHECK(conjugate(D3, s, r) == 2);
    CHECK(center(make_dihedral(4)).size() == 2);
    CHECK(center(D3).size() == 1);
}

TEST_CASE("group axiom report") {
    CHECK(check_group_axioms(make_cyclic(2).table).ok());
    Report r = check_group_axioms({{0, 1}, {1, 1}});
    REQUIRE_FALSE(r.ok());
    bool found = false;
    for (const auto& f : r.failures) found |= f.note.find("element 1 has no inverse") != std::string::npos;
    CHECK(found);
    CHECK(check_group_axioms(make_product(make_cyclic(2), make_cyclic(3)).table).ok());
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), std::invalid_argument);
}

TEST_CASE("conjugation") {
    CHECK(conjugate(make_trivial(), 0, 0) == 0);
    auto Z2Z3 = make_product(make_cyclic(2), make_cyclic(3));
    for (int g = 0; g < Z2Z3.order; ++g)
        for (int h = 0; h < Z2Z3.order; ++h) CHECK(conjugate(Z2Z3, g, h) == h);
    // s r s^-1 = r^-1 = r^2
    CHECK(conjugate(make_dihedral(3), 3, 1) == 2);
}

TEST_CASE("products and specs") {
    auto P = make_product(make_cyclic(2), make_cyclic(3));
    CHECK(P.order == 6);
    CHECK(P.is_abelian());
    CHECK(brute_force_group(P));
    CHECK(parse_group_spec("Z2xZ3") == P);
    CHECK(parse_group_spec("D3") == make_dihedral(3));
    CHECK(parse_group_spec("1").order == 1);
    CHECK_THROWS(parse_group_spec("Q8x"));
    CHECK(parse_abelian_spec("Z2xZ4").factors == std::vector<int>{2, 4});
}

TEST_CASE("homomorphisms and kernels") {
    GroupHom red{make_cyclic(4), make_cyclic(2), {0, 1, 0, 1}};
    CHECK(red.check().ok());
    auto k = kernel_normal(red);
    CHECK(k.elements == std::vector<int>{0, 2});
    CHECK(k.normal);

    auto D3 = make_dihedral(3);
    std::vector<int> id(6);
    for (int i = 0; i < 6; ++i) id[i] = i;
    CHECK(kernel_normal(GroupHom{D3, D3, id}).elements == std::vector<int>{0});
    CHECK(kernel_normal(GroupHom{D3, make_trivial(), std::vector<int>(6, 0)}).elements.size() == 6);

    GroupHom bad{make_cyclic(3), make_cyclic(2), {0, 1, 1}};
    CHECK_FALSE(bad.check().ok());
    CHECK_THROWS_AS(kernel_normal(bad), InvalidHom);
}

TEST_CASE("finite abelian groups") {
    FiniteAbelianGroup A({2, 4});
    CHECK(A.order == 8);
    std::set<std::vector<int>> seen;
    for (int a = 0; a < A.order; ++a) {
        auto v = A.decode(a);
        CHECK(A.encode(v) == a);
        seen.insert(v);
        CHECK(A.add(a, A.neg(a)) == 0);
        for (int b = 0; b < A.order; ++b) {
            auto w = A.decode(b);
            auto s = A.decode(A.add(a, b));
            CHECK(s[0] == (v[0] + w[0]) % 2);
            CHECK(s[1] == (v[1] + w[1]) % 4);
        }
    }
    CHECK(seen.size() == 8);
    CHECK(A.additive_order(A.unit_in(1)) == 4);
    CHECK(A.as_group().is_abelian());
    CHECK(check_group_axioms(A.as_group().table).ok());

    KSum s(A);
    s.add(A.unit_in(1), 3).sub(A.unit_in(1)).add(A.unit_in(0), 5);
    CHECK(A.decode(s.value()) == std::vector<int>{1, 2});
}
