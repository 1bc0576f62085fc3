#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "gcb/crossed_monoid.hpp"
#include "gcb/gcrossed.hpp"

using namespace gcb;

namespace {

const FiniteAbelianGroup Z2({2}), Z3({3}), Z4({4});

GCrossedPointedCategory omega_example() {
    // trivial B on Z/2 over K = Z/4, G = Z/2, mu = 0, omega(1,1,1) = 2
    auto G = make_cyclic(2);
    return zest(trivial_abelian_cocycle(Z2, Z4), G, Cochain(G, Z2, 2), fx::cochain(G, Z4, 3, {{{1, 1, 1}, 2}}));
}

std::set<std::string> labels(const Report& r) {
    std::set<std::string> s;
    for (const auto& f : r.failures) s.insert(f.axiom);
    return s;
}

VerifyOptions all() {
    VerifyOptions o;
    o.exhaustive = true;
    return o;
}

}  // namespace

TEST_CASE("trivial G-crossed category") {
    for (const auto& G : {make_cyclic(2), make_dihedral(3)}) {
        auto C = make_trivial_gcrossed(G, Z4);
        CHECK(verify_all(C).ok());
        CHECK(is_strict(C));
        CHECK(check_well_typed(C).ok());
    }
}

TEST_CASE("zest with trivial data is B x Vec(G)") {
    auto G = make_cyclic(3);
    auto C = zest(trivial_abelian_cocycle(Z2, Z2), G, Cochain(G, Z2, 2), Cochain(G, Z2, 3));
    CHECK(C.n == 6);
    CHECK(is_strict(C));
    for (int v : C.braid) CHECK(v == 0);
    CHECK(verify_all(C).ok());
}

TEST_CASE("associator of the omega example") {
    auto C = omega_example();
    CHECK(verify_all(C).ok());
    CHECK_FALSE(is_strict(C));
    for (int g = 0; g < 2; ++g)
        for (int h = 0; h < 2; ++h)
            for (int k = 0; k < 2; ++k)
                CHECK(C.a(zest_object(g, 0, 2), zest_object(h, 0, 2), zest_object(k, 0, 2)) ==
                      (g && h && k ? 2 : 0));
}

TEST_CASE("bumped associator fails the pentagon exactly where it appears") {
    auto C = omega_example();
    const int x = 3, y = 3, z = 1;
    C.a(x, y, z) = C.K.add(C.a(x, y, z), 1);
    Report r = verify_monoidal(C, all());
    REQUIRE_FALSE(r.ok());
    CHECK(labels(r) == std::set<std::string>{"pentagon"});

    // oracle: signed multiplicity of (x,y,z) among the five faces of each 4-tuple
    std::set<std::vector<int>> expect;
    const int n = C.n;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    auto is = [&](int a, int b, int c) { return a == x && b == y && c == z ? 1 : 0; };
                    int mult = is(p, q, s) + is(p, C.T(q, s), t) + is(q, s, t) - is(C.T(p, q), s, t) - is(p, q, C.T(s, t));
                    if (mult % 4 != 0) expect.insert({p, q, s, t});
                }
    std::set<std::vector<int>> got;
    for (const auto& f : r.failures) got.insert(f.witness);
    CHECK(got == expect);
}

TEST_CASE("zest outputs over Z/2 and Z/3 verify") {
    for (int n : {2, 3}) {
        auto G = make_cyclic(n);
        for (const auto& B : {trivial_abelian_cocycle(Z2, Z4), trivial_abelian_cocycle(Z3, Z3)}) {
            Cochain mu(G, B.A, 2);
            // a carry cocycle whenever |G| = |A|
            if (G.order == B.A.order)
                for (int g = 0; g < n; ++g)
                    for (int h = 0; h < n; ++h) mu.at({g, h}) = g + h >= n ? 1 : 0;
            auto w = solve_obstruction(mu, B);
            REQUIRE(w);
            auto C = zest(B, G, mu, *w);
            CHECK(verify_all(C).ok());
        }
    }
}

TEST_CASE("bumped psi fails psi1 and mu1") {
    auto C = omega_example();
    C.ps(1, 1, 3) = C.K.add(C.ps(1, 1, 3), 1);
    auto ls = labels(verify_action(C, all()));
    CHECK(ls.count("psi1"));
    CHECK(ls.count("mu1"));
}

TEST_CASE("semion zesting") {
    auto G = make_cyclic(2);
    auto C = zest(semion(), G, Cochain(G, Z2, 2), *solve_obstruction(Cochain(G, Z2, 2), semion()));
    CHECK(verify_all(C).ok());
    CHECK(verify_braiding(C).ok());

    auto D = C;
    D.c(1, 3) = D.K.add(D.c(1, 3), 1);
    Report r = verify_braiding(D, all());
    REQUIRE_FALSE(r.ok());
    for (const auto& f : r.failures) {
        CHECK((f.axiom == "beta2" || f.axiom == "beta3"));
        bool adjacent = false;
        for (int v : f.witness) adjacent |= v == 1 || v == 3;
        CHECK(adjacent);
    }

    auto mu = fx::cochain(G, Z2, 2, {{{1, 1}, 1}});
    CHECK_THROWS_AS(zest(semion(), G, mu, Cochain(G, Z4, 3)), ObstructionNonvanishing);
}

TEST_CASE("precondition errors") {
    auto G = make_cyclic(2);
    auto notco = fx::cochain(G, Z2, 2, {{{1, 0}, 1}});
    CHECK_THROWS_AS(zest(trivial_abelian_cocycle(Z2, Z4), G, notco, Cochain(G, Z4, 3)), NotACocycle);
}

TEST_CASE("obstruction necessity") {
    // trivial B, mu with (alpha,beta)_* mu != 0, omega = 0: the pentagon on
    // section objects (g,0) fails by d(omega) - pushforward
    auto G = make_cyclic(2);
    auto B = bicharacter(Z2, Z4, {0, 0, 0, 2});
    auto mu = fx::cochain(G, Z2, 2, {{{1, 1}, 1}});
    Cochain omega(G, Z4, 3);
    auto P = pw_pushforward(mu, B);
    auto obstruction = coboundary(omega);
    for (std::size_t i = 0; i < P.size(); ++i) obstruction.values[i] = Z4.sub(obstruction.values[i], P.values[i]);
    REQUIRE_FALSE(check_obstruction(omega, mu, B));
    auto C = zest_unchecked(B, G, mu, omega);
    Report r = verify_monoidal(C, all());
    REQUIRE(r.has("pentagon"));
    int seen = 0;
    for (const auto& f : r.failures) {
        if (f.axiom != "pentagon") continue;
        bool section = true;
        std::vector<int> g;
        for (int v : f.witness) {
            section &= v % 2 == 0;
            g.push_back(v / 2);
        }
        if (!section) continue;
        ++seen;
        CHECK(f.defect == obstruction.at(g));
    }
    CHECK(seen > 0);
}

TEST_CASE("functors") {
    auto C = omega_example();
    auto I = identity_functor(C);
    CHECK(verify_functor(I).ok());
    CHECK(compose_functors(I, I) == I);
    auto F = I;
    F.ag[1 * C.n + 3] = C.K.add(F.ag[1 * C.n + 3], 1);
    CHECK(verify_functor(F, all()).has("gamma1"));
    GCrossedTransformation t{I, I, std::vector<int>(C.n, 0)};
    CHECK(verify_transformation(t).ok());
}

TEST_CASE("duals in G-crossed categories") {
    auto G = make_cyclic(2);
    for (const auto& C : {omega_example(), zest(semion(), G, Cochain(G, Z2, 2), fx::cochain(G, Z4, 3, {{{1, 1, 1}, 2}}))}) {
        auto ops = monoidal_ops(C);
        for (int x = 0; x < C.n; ++x) {
            auto r = right_dual(C, x);
            CHECK(snake_defects(ops, r) == std::pair{0, 0});
            auto l = left_dual_from_right(C, r);
            CHECK(l.left);
            CHECK(check_snake(C, l));
        }
    }
}

TEST_CASE("decategorification") {
    auto D3 = make_dihedral(3);
    CHECK(decategorify(make_trivial_gcrossed(D3, Z2)) == group_as_crossed_monoid(D3));
    auto M = decategorify(omega_example());
    CHECK(verify(M).ok());
    auto one = make_trivial();
    auto E = zest(semion(), one, Cochain(one, Z2, 2), Cochain(one, Z4, 3));
    CHECK(is_commutative(decategorify(E), 0));
}

TEST_CASE("extracting a braided category") {
    auto one = make_trivial();
    auto E = zest(semion(), one, Cochain(one, Z2, 2), Cochain(one, Z4, 3));
    auto X = extract_braided(E);
    CHECK(check_pentagon(X.cat).ok());
    CHECK(check_hexagons(X.cat).ok());
    CHECK(quadratic_form(X.cat, 1) == quadratic_form(semion(), 1));
    CHECK_THROWS_AS(extract_braided(omega_example()), NotAGroupOfObjects);
}
