#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "gcb/cochain.hpp"
#include "gcb/smith.hpp"

using namespace gcb;

TEST_CASE("coboundary agrees with a hand-rolled reference") {
    for (int n : {2, 3, 4})
        for (int m : {2, 3, 4})
            for (int deg : {1, 2, 3}) {
                Cochain c(make_cyclic(n), FiniteAbelianGroup({m}), deg);
                unsigned seed = 17u * n + 5u * m + deg;
                for (auto& v : c.values) {
                    seed = seed * 1103515245u + 12345u;
                    v = (seed >> 8) % m;
                }
                CHECK(coboundary(c).values == fx::ref_coboundary(n, m, deg, c.values));
            }
}

TEST_CASE("coboundary examples") {
    auto Z2 = make_cyclic(2);
    FiniteAbelianGroup K2({2}), K4({4});
    Cochain zero(Z2, K4, 2);
    CHECK(is_cocycle(zero));
    auto b = is_coboundary(zero);
    REQUIRE(b);
    for (int v : b->values) CHECK(v == 0);

    // a homomorphism is a 1-cocycle
    CHECK(is_cocycle(fx::cochain(Z2, K2, 1, {{{1}, 1}})));

    auto w1 = fx::cochain(Z2, K4, 3, {{{1, 1, 1}, 1}});
    CHECK(w1.is_normalized());
    CHECK_FALSE(is_cocycle(w1));
    CHECK(coboundary(w1).at({1, 1, 1, 1}) == 2);

    auto w2 = fx::cochain(Z2, K4, 3, {{{1, 1, 1}, 2}});
    CHECK(is_cocycle(w2));
    CHECK_FALSE(is_coboundary(w2));
}

TEST_CASE("is_coboundary matches exhaustive search") {
    // every 2-cochain on Z/2 into Z/2 and Z/3 into Z/3: compare the Smith
    // solver with the image of d over all 1-cochains
    for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 4}}) {
        auto G = make_cyclic(n);
        FiniteAbelianGroup K({m});
        std::set<std::vector<int>> image;
        int ones = 1;
        for (int i = 0; i < n; ++i) ones *= m;
        for (int code = 0; code < ones; ++code) {
            std::vector<int> c1(n);
            for (int i = 0, r = code; i < n; ++i, r /= m) c1[i] = r % m;
            image.insert(fx::ref_coboundary(n, m, 1, c1));
        }
        long total = 1;
        for (int i = 0; i < n * n; ++i) total *= m;
        for (long code = 0; code < total; ++code) {
            Cochain c(G, K, 2);
            long r = code;
            for (auto& v : c.values) {
                v = r % m;
                r /= m;
            }
            auto b = is_coboundary(c);
            CHECK(b.has_value() == (image.count(c.values) > 0));
            if (b) CHECK(coboundary(*b).values == c.values);
        }
    }
}

TEST_CASE("Smith solver") {
    // 2x = 1 has no solution mod 4; 3x = 1 does
    CHECK_FALSE(solve_mod({{2}}, 1, {1}, 4));
    auto x = solve_mod({{3}}, 1, {1}, 4);
    REQUIRE(x);
    CHECK((*x)[0] * 3 % 4 == 1);
    SmithMod S({{2, 0}, {0, 0}}, 2, 4);
    CHECK(S.kernel_size() == 8);  // gcd(2,4) * 4
}

TEST_CASE("pushforward formula") {
    auto Z2 = make_cyclic(2);
    FiniteAbelianGroup A({2}), K({4});
    auto mu = fx::cochain(Z2, A, 2, {{{1, 1}, 1}});

    auto zero = pw_pushforward(Cochain(Z2, A, 2), semion());
    for (int v : zero.values) CHECK(v == 0);

    auto P = pw_pushforward(mu, bicharacter(A, K, {0, 0, 0, 1}));
    for (std::size_t i = 0; i < P.size(); ++i) CHECK(P.values[i] == (P.args(i) == std::vector<int>{1, 1, 1, 1} ? 1 : 0));

    auto Ps = pw_pushforward(mu, semion());
    CHECK(is_cocycle(Ps));
    CHECK_THROWS_AS(pw_pushforward(Cochain(Z2, K, 2), semion()), CoefficientMismatch);
}

TEST_CASE("obstruction") {
    auto Z2 = make_cyclic(2);
    FiniteAbelianGroup A({2}), K({4});
    auto mu = fx::cochain(Z2, A, 2, {{{1, 1}, 1}});
    auto triv = trivial_abelian_cocycle(A, K);
    CHECK(check_obstruction(Cochain(Z2, K, 3), Cochain(Z2, A, 2), triv));
    CHECK_FALSE(solve_obstruction(mu, semion()));
    for (int w = 0; w < 4; ++w)
        CHECK_FALSE(check_obstruction(fx::cochain(Z2, K, 3, {{{1, 1, 1}, w}}), mu, semion()));
    CHECK(check_obstruction(fx::cochain(Z2, K, 3, {{{1, 1, 1}, 2}}), mu, triv));
    auto w = solve_obstruction(Cochain(Z2, A, 2), semion());
    REQUIRE(w);
    CHECK(check_obstruction(*w, Cochain(Z2, A, 2), semion()));
}

TEST_CASE("quadratic forms") {
    FiniteAbelianGroup A({2}), K({4});
    auto triv = trivial_abelian_cocycle(A, K);
    CHECK(quadratic_form(triv, 0) == 0);
    CHECK(quadratic_form(triv, 1) == 0);
    int q = quadratic_form(semion(), 1);
    CHECK((q == 1 || q == 3));
    CHECK(q == 3);  // golden value under the dual convention in use
    CHECK_THROWS_AS(quadratic_form(bicharacter(A, K, {0, 0, 0, 1}), 1), InvalidAbelianCocycle);
}

namespace {

// q : A -> K with q(-a) = q(a) and polarization bilinear, by brute force
long count_quadratic(int n, int m) {
    long total = 1, count = 0;
    for (int i = 0; i < n; ++i) total *= m;
    for (long code = 0; code < total; ++code) {
        std::vector<int> q(n);
        long r = code;
        for (auto& v : q) {
            v = r % m;
            r /= m;
        }
        if (q[0] != 0) continue;
        bool ok = true;
        auto b = [&](int x, int y) { return ((q[(x + y) % n] - q[x] - q[y]) % m + 2 * m) % m; };
        for (int x = 0; x < n && ok; ++x) {
            ok &= q[(n - x) % n] == q[x];
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n && ok; ++z) ok &= b((x + y) % n, z) == (b(x, z) + b(y, z)) % m;
        }
        count += ok;
    }
    return count;
}

}  // namespace

TEST_CASE("quadratic form enumeration") {
    CHECK(enumerate_quadratic_forms(FiniteAbelianGroup({2}), FiniteAbelianGroup({4})).size() == 4);
    CHECK(enumerate_quadratic_forms(FiniteAbelianGroup({2}), FiniteAbelianGroup({2})).size() == 2);
    CHECK(enumerate_quadratic_forms(FiniteAbelianGroup(std::vector<int>{}), FiniteAbelianGroup({4})).size() == 1);
    for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{3, 3}, std::pair{4, 2}, std::pair{2, 8}}) {
        CAPTURE(n);
        CAPTURE(m);
        long want = count_quadratic(n, m);
        CHECK(static_cast<long>(enumerate_quadratic_forms(FiniteAbelianGroup({n}), FiniteAbelianGroup({m})).size()) ==
              want);
        CHECK(enumerate_abelian_cocycle_classes(FiniteAbelianGroup({n}), FiniteAbelianGroup({m})) == want);
    }
}

TEST_CASE("cocycle classes by orbit counting") {
    // A = K = Z/2: every (alpha, beta) satisfying pentagon + hexagons, modulo
    // alpha -> alpha - df, beta -> beta + f(a,b) - f(b,a)
    FiniteAbelianGroup A({2}), K({2});
    std::set<std::vector<int>> valid;
    for (int code = 0; code < (1 << 12); ++code) {
        AbelianThreeCocycle ac(A, K);
        for (int i = 0; i < 8; ++i) ac.alpha.values[i] = (code >> i) & 1;
        for (int i = 0; i < 4; ++i) ac.beta[i] = (code >> (8 + i)) & 1;
        if (!check_pentagon(ac).ok() || !check_hexagons(ac).ok()) continue;
        std::vector<int> key = ac.alpha.values;
        key.insert(key.end(), ac.beta.begin(), ac.beta.end());
        valid.insert(key);
    }
    std::set<std::vector<int>> reps;
    for (const auto& v : valid) {
        std::vector<int> best = v;
        for (int f = 0; f < 16; ++f) {
            std::vector<int> fv = {f & 1, (f >> 1) & 1, (f >> 2) & 1, (f >> 3) & 1};
            auto df = fx::ref_coboundary(2, 2, 2, fv);
            std::vector<int> w = v;
            for (int i = 0; i < 8; ++i) w[i] = (w[i] + df[i]) % 2;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) w[8 + a * 2 + b] = (w[8 + a * 2 + b] + fv[a * 2 + b] + fv[b * 2 + a]) % 2;
            best = std::min(best, w);
        }
        reps.insert(best);
    }
    CHECK(reps.size() == 2);
    CHECK(enumerate_abelian_cocycle_classes(A, K) == 2);
}
