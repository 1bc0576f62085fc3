// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gcb/cochain.hpp"
#include "gcb/crossed_monoid.hpp"
#include "gcb/gcrossed.hpp"
#include "gcb/graymonoid.hpp"
#include "gcb/pointed_cat.hpp"

using namespace gcb;

namespace {

// pinned limits, seconds
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 1.0;
constexpr double kLimit3 = 30.0;
constexpr double kLimit5 = 10.0;
constexpr double kLimit6 = 60.0;
constexpr double kLimit7 = 300.0;
constexpr double kLimit10 = 5.0;
constexpr int kMutants = 50;
constexpr int kWordPairs = 1000;
constexpr int kMaxLeaves = 5;
constexpr unsigned kSeed = 20240611;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void run(int id, const std::string& name, double limit, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) o.fail("took " + std::to_string(secs) + " s");
    if (!o.ok) ++failures;
    std::ostringstream line;
    line << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << name;
    char buf[64];
    if (limit > 0)
        std::snprintf(buf, sizeof buf, " [%.3f s / %.0f s]", secs, limit);
    else
        std::snprintf(buf, sizeof buf, " [%.3f s, exact]", secs);
    line << buf;
    if (!o.detail.empty()) line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
}

// ---- independent o4 evaluator ----------------------------------------------
// Literal transcription on residues for cyclic A = Z/a, K = Z/m.
std::vector<int> o4_reference(const FiniteGroup& G, int a, int m, const std::vector<int>& mu,
                              const std::vector<int>& alpha, const std::vector<int>& beta) {
    const int n = G.order;
    auto M = [&](int x, int y) { return mu[x * n + y]; };
    auto al = [&](int x, int y, int z) { return alpha[(x * a + y) * a + z]; };
    auto be = [&](int x, int y) { return beta[x * a + y]; };
    std::vector<int> out;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    int gh = G.mul(g, h), hk = G.mul(h, k), kl = G.mul(k, l);
                    int ghk = G.mul(gh, k), hkl = G.mul(hk, l);
                    long v = be(M(k, l), M(g, h)) - al(M(ghk, l), M(gh, k), M(g, h)) +
                             al(M(ghk, l), M(g, hk), M(h, k)) - al(M(g, hkl), M(hk, l), M(h, k)) +
                             al(M(g, hkl), M(h, kl), M(k, l)) - al(M(gh, kl), M(g, h), M(k, l)) +
                             al(M(gh, kl), M(k, l), M(g, h));
                    out.push_back(static_cast<int>(((v % m) + m) % m));
                }
    return out;
}

// ---- corpus -----------------------------------------------------------------

struct Case {
    std::string name;
    PointedBraidedCategory B;
    FiniteGroup G;
    Cochain mu;
    Cochain omega;
    bool obstructed = false;
};

std::vector<PointedBraidedCategory> braided_corpus() {
    FiniteAbelianGroup Z2({2}), Z3({3}), Z4({4});
    std::vector<int> bz3;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) bz3.push_back(x * y % 3);
    return {
        trivial_abelian_cocycle(Z2, Z2), trivial_abelian_cocycle(Z2, Z4), trivial_abelian_cocycle(Z2, Z3),
        trivial_abelian_cocycle(Z3, Z3), trivial_abelian_cocycle(Z3, Z2), trivial_abelian_cocycle(Z3, Z4),
        semion(),                        bicharacter(Z2, Z2, {0, 0, 0, 1}), bicharacter(Z2, Z4, {0, 0, 0, 2}),
        bicharacter(Z3, Z3, bz3),
    };
}

std::string cat_name(const PointedBraidedCategory& B) {
    std::ostringstream os;
    os << "B(" << B.A.str() << "," << B.K.str() << ",beta=";
    for (int v : B.beta) os << v;
    os << (B.alpha.values == std::vector<int>(B.alpha.size(), 0) ? "" : ",alpha") << ")";
    return os.str();
}

// normalized cochains on G of the given degree, lexicographic, at most cap
std::vector<Cochain> normalized_cocycles(const FiniteGroup& G, const FiniteAbelianGroup& K, int degree, long cap) {
    Cochain c(G, K, degree);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < c.size(); ++i) {
        bool ok = true;
        for (int x : c.args(i)) ok &= x != 0;
        if (ok) free.push_back(i);
    }
    long total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
        total *= K.order;
        if (total > cap) return {};
    }
    std::vector<Cochain> out;
    for (long code = 0; code < total; ++code) {
        long r = code;
        for (auto i : free) {
            c.values[i] = static_cast<int>(r % K.order);
            r /= K.order;
        }
        if (is_cocycle(c)) out.push_back(c);
    }
    return out;
}

// evenly spaced picks, always including the first and last
template <class T>
std::vector<T> spread(const std::vector<T>& v, std::size_t k) {
    if (v.size() <= k) return v;
    std::vector<T> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(v[i * (v.size() - 1) / (k - 1)]);
    return out;
}

std::vector<Case> zest_corpus() {
    std::vector<Case> out;
    const std::vector<std::pair<std::string, FiniteGroup>> groups = {
        {"Z2", make_cyclic(2)}, {"Z3", make_cyclic(3)}, {"Z2xZ2", make_product(make_cyclic(2), make_cyclic(2))}};
    std::mt19937 rng(kSeed);
    for (const auto& B : braided_corpus())
        for (const auto& [gname, G] : groups) {
            auto mus = spread(normalized_cocycles(G, B.A, 2, 20000), 6);
            auto shifts = normalized_cocycles(G, B.K, 3, 10000);
            for (const auto& mu : mus) {
                std::string base = cat_name(B) + " G=" + gname + " mu#" + std::to_string(&mu - mus.data());
                auto w = solve_obstruction(mu, B);
                if (!w) {
                    out.push_back({base, B, G, mu, Cochain(G, B.K, 3), true});
                    continue;
                }
                out.push_back({base + " omega=solved", B, G, mu, *w, false});
                // shifted by a couple of nonzero 3-cocycles
                int used = 0;
                for (const auto& z : shifts) {
                    if (std::all_of(z.values.begin(), z.values.end(), [](int v) { return v == 0; })) continue;
                    if (used == 2) break;
                    Cochain o = *w;
                    for (std::size_t i = 0; i < o.size(); ++i) o.values[i] = B.K.add(o.values[i], z.values[i]);
                    out.push_back({base + " omega=solved+z" + std::to_string(used++), B, G, mu, o, false});
                }
                // and a gauge-equivalent one
                Cochain f(G, B.K, 2);
                for (std::size_t i = 0; i < f.size(); ++i) {
                    auto a = f.args(i);
                    f.values[i] = (a[0] && a[1]) ? static_cast<int>(rng() % B.K.order) : 0;
                }
                Cochain df = coboundary(f), o = *w;
                for (std::size_t i = 0; i < o.size(); ++i) o.values[i] = B.K.add(o.values[i], df.values[i]);
                out.push_back({base + " omega=solved+df", B, G, mu, o, false});
            }
        }
    return out;
}

// strict instances: bilinear beta with mu such that the pushforward
// vanishes and omega = 0, plus trivial B with nonzero mu
std::vector<std::pair<std::string, GCrossedPointedCategory>> strict_corpus(const std::vector<Case>& cases) {
    std::vector<std::pair<std::string, GCrossedPointedCategory>> out;
    for (const auto& c : cases) {
        if (c.obstructed) continue;
        Cochain zero(c.G, c.B.K, 3);
        if (!check_obstruction(zero, c.mu, c.B)) continue;
        if (c.omega.values != zero.values) continue;
        auto C = zest(c.B, c.G, c.mu, zero);
        if (is_strict(C)) out.emplace_back(c.name, C);
    }
    auto D3 = make_dihedral(3);
    for (const auto& B : braided_corpus()) {
        if (B.alpha.values != std::vector<int>(B.alpha.size(), 0)) continue;
        auto C = zest(B, D3, Cochain(D3, B.A, 2), Cochain(D3, B.K, 3));
        if (is_strict(C)) out.emplace_back(cat_name(B) + " G=D3", C);
    }
    return out;
}

}  // namespace

int main() {
    std::cout << "building corpus..." << std::endl;
    const auto cases = zest_corpus();
    std::vector<std::pair<std::string, GCrossedPointedCategory>> verified;  // filled by criterion 3
    int obstructed = 0;
    for (const auto& c : cases) obstructed += c.obstructed;
    std::cout << "  " << cases.size() << " (B, G, mu, omega) cases, " << obstructed << " obstructed" << std::endl;

    run(1, "pushforward formula", kLimit1, [] {
        Outcome o;
        FiniteAbelianGroup A({2}), K({4});
        auto G = make_cyclic(2);
        Cochain mu(G, A, 2);
        mu.at({1, 1}) = 1;
        auto P = pw_pushforward(mu, bicharacter(A, K, {0, 0, 0, 1}));
        for (std::size_t i = 0; i < P.size(); ++i) {
            int want = P.args(i) == std::vector<int>{1, 1, 1, 1} ? 1 : 0;
            if (P.values[i] != want) o.fail("example differs at index " + std::to_string(i));
        }
        // term-by-term against the reference on every corpus input
        std::mt19937 rng(kSeed);
        int compared = 0;
        for (const auto& B : braided_corpus()) {
            if (B.A.factors.size() != 1 || B.K.factors.size() != 1) continue;
            for (const auto& G : {make_cyclic(2), make_cyclic(3), make_dihedral(3)}) {
                for (int rep = 0; rep < 5; ++rep) {
                    Cochain m(G, B.A, 2);
                    for (std::size_t i = 0; i < m.size(); ++i) {
                        auto a = m.args(i);
                        m.values[i] = (a[0] && a[1]) ? static_cast<int>(rng() % B.A.order) : 0;
                    }
                    auto ref = o4_reference(G, B.A.order, B.K.order, m.values, B.alpha.values, B.beta);
                    if (pw_pushforward(m, B).values != ref) o.fail("mismatch for " + cat_name(B));
                    ++compared;
                }
            }
        }
        o.detail = o.ok ? std::to_string(compared) + " pushforwards matched" : o.detail;
        return o;
    });

    run(2, "obstruction theory", kLimit2, [] {
        Outcome o;
        FiniteAbelianGroup A({2}), K({4});
        auto G = make_cyclic(2);
        Cochain mu(G, A, 2);
        mu.at({1, 1}) = 1;
        if (solve_obstruction(mu, semion())) o.fail("semion with mu(1,1)=1 reported solvable");
        for (int w = 0; w < 4; ++w) {
            Cochain om(G, K, 3);
            om.at({1, 1, 1}) = w;
            if (check_obstruction(om, mu, semion())) o.fail("omega(1,1,1)=" + std::to_string(w) + " accepted");
        }
        // trivial (alpha, beta): every 3-cocycle omega satisfies it, for every mu
        int checked = 0;
        for (const auto& [Gr, Kn] : {std::pair{make_cyclic(2), 4}, std::pair{make_cyclic(3), 3}, std::pair{make_cyclic(2), 2}}) {
            FiniteAbelianGroup Kg({Kn});
            auto triv = trivial_abelian_cocycle(FiniteAbelianGroup({Gr.order}), Kg);
            auto omegas = normalized_cocycles(Gr, Kg, 3, 100000);
            auto mus = normalized_cocycles(Gr, triv.A, 2, 100000);
            for (const auto& m : mus)
                for (const auto& om : omegas) {
                    ++checked;
                    if (!check_obstruction(om, m, triv)) o.fail("trivial data rejected a cocycle omega");
                }
        }
        o.detail = o.ok ? std::to_string(checked) + " (mu, omega) pairs with trivial data" : o.detail;
        return o;
    });

    run(3, "zesting soundness", kLimit3, [&] {
        Outcome o;
        int passed = 0;
        for (const auto& c : cases) {
            if (c.obstructed) continue;
            auto C = zest(c.B, c.G, c.mu, c.omega);
            Report r = verify_all(C);
            if (!r.ok()) {
                o.fail(c.name + ": " + r.failures.front().axiom);
                continue;
            }
            ++passed;
            verified.emplace_back(c.name, std::move(C));
        }
        if (o.ok) o.detail = std::to_string(passed) + " zest outputs, zero failures";
        return o;
    });

    run(4, "obstruction necessity", 0, [&] {
        Outcome o;
        int tried = 0;
        std::mt19937 rng(kSeed + 4);
        for (const auto& c : cases) {
            // obstructed cases with omega = 0, unobstructed ones with a broken omega
            Cochain omega = c.omega;
            if (!c.obstructed) {
                std::vector<std::size_t> free;
                for (std::size_t i = 0; i < omega.size(); ++i) {
                    auto a = omega.args(i);
                    if (a[0] && a[1] && a[2]) free.push_back(i);
                }
                if (free.empty()) continue;
                auto i = free[rng() % free.size()];
                omega.values[i] = c.B.K.add(omega.values[i], c.B.K.unit_in(0));
            }
            if (check_obstruction(omega, c.mu, c.B)) continue;
            ++tried;
            auto P = pw_pushforward(c.mu, c.B);
            auto dw = coboundary(omega);
            auto C = zest_unchecked(c.B, c.G, c.mu, omega);
            VerifyOptions all;
            all.exhaustive = true;
            Report r = verify_monoidal(C, all);
            if (!r.has("pentagon")) {
                o.fail(c.name + ": no pentagon failure");
                continue;
            }
            const int na = c.B.A.order;
            std::map<std::vector<int>, int> section;
            for (const auto& f : r.failures) {
                if (f.axiom != "pentagon") continue;
                std::vector<int> g;
                bool on_section = true;
                for (int x : f.witness) {
                    on_section &= x % na == 0;
                    g.push_back(x / na);
                }
                if (on_section) section[g] = f.defect;
            }
            for (std::size_t i = 0; i < P.size(); ++i) {
                int want = c.B.K.sub(dw.values[i], P.values[i]);
                auto g = P.args(i);
                int got = section.count(g) ? section[g] : 0;
                if (got != want) o.fail(c.name + ": defect " + std::to_string(got) + " vs obstruction " + std::to_string(want));
            }
        }
        if (o.ok) o.detail = std::to_string(tried) + " violating omegas, defects equal d(omega) - pushforward";
        return o;
    });

    const auto strict = strict_corpus(cases);

    run(5, "round trip on the nose", kLimit5, [&] {
        Outcome o;
        for (const auto& [name, C] : strict) {
            auto back = to_gcrossed(from_gcrossed(C));
            if (auto d = first_difference(back, C)) o.fail(name + ": " + *d);
            auto rt = roundtrip_check(C);
            if (!rt.functor_report.ok()) o.fail(name + ": identity functor fails");
        }
        if (o.ok) o.detail = std::to_string(strict.size()) + " strict instances, bitwise equal";
        return o;
    });

    run(6, "Gray <-> G-crossed cross-oracle", kLimit6, [&] {
        Outcome o;
        int agree = 0, mutants = 0;
        auto compare = [&](const std::string& name, const PointedGrayMonoid& M, bool mutant) {
            bool gray_ok = verify_gray(M).ok();
            bool gc_ok = verify_all(to_gcrossed_unchecked(M)).ok();
            if (gray_ok != gc_ok) o.fail(name + ": verify_gray " + (gray_ok ? "passes" : "fails") + ", verify_all " + (gc_ok ? "passes" : "fails"));
            else ++agree;
            if (mutant && gray_ok && gc_ok) o.fail(name + ": mutation undetected");
            if (!mutant && !(gray_ok && gc_ok)) o.fail(name + ": corpus instance rejected");
        };
        for (const auto& [name, C] : strict) compare(name, from_gcrossed(C), false);
        std::mt19937 rng(kSeed + 6);
        while (mutants < kMutants) {
            const auto& [name, C] = strict[rng() % strict.size()];
            std::vector<std::pair<int, int>> pairs;
            for (int x = 0; x < C.n; ++x)
                for (int y = 0; y < C.n; ++y)
                    if (x != C.unit && y != C.unit) pairs.emplace_back(x, y);
            if (pairs.empty()) continue;
            auto [x, y] = pairs[rng() % pairs.size()];
            auto D = C;
            int bump = 1 + static_cast<int>(rng() % (C.K.order - 1));
            D.c(x, y) = D.K.add(D.c(x, y), bump);
            compare(name + " braid[" + std::to_string(x) + "," + std::to_string(y) + "]+" + std::to_string(bump),
                    from_gcrossed_unchecked(D), true);
            ++mutants;
        }
        if (o.ok) o.detail = std::to_string(agree) + " agreements (" + std::to_string(mutants) + " mutants, all detected)";
        return o;
    });

    run(7, "quadratic forms vs cocycle classes", kLimit7, [] {
        Outcome o;
        const std::tuple<int, int, std::size_t> table[] = {{2, 2, 2}, {2, 4, 4}, {3, 3, 3}};
        std::ostringstream os;
        for (auto [a, k, want] : table) {
            FiniteAbelianGroup A({a}), K({k});
            auto q = enumerate_quadratic_forms(A, K).size();
            auto c = enumerate_abelian_cocycle_classes(A, K);
            os << "(Z" << a << ",Z" << k << ")=" << q << "/" << c << " ";
            if (q != want || static_cast<std::size_t>(c) != want) o.fail(os.str());
        }
        if (o.ok) o.detail = os.str();
        return o;
    });

    run(8, "rigidity", 0, [&] {
        Outcome o;
        long objects = 0;
        for (const auto& [name, C] : verified) {
            auto ops = monoidal_ops(C);
            for (int x = 0; x < C.n; ++x) {
                ++objects;
                auto r = right_dual(C, x);
                auto l = left_dual_from_right(C, r);
                if (snake_defects(ops, r) != std::pair{0, 0}) o.fail(name + ": right snake at " + std::to_string(x));
                if (!check_snake(C, l)) o.fail(name + ": left snake at " + std::to_string(x));
            }
        }
        if (o.ok) o.detail = std::to_string(objects) + " objects, all snakes 0";
        return o;
    });

    run(9, "decategorification", 0, [&] {
        Outcome o;
        int n = 0;
        for (const auto& [name, C] : verified) {
            ++n;
            if (!verify(decategorify(C)).ok()) o.fail(name);
        }
        // trivial G: Eckmann-Hilton
        auto one = make_trivial();
        for (const auto& B : braided_corpus()) {
            auto C = zest(B, one, Cochain(one, B.A, 2), Cochain(one, B.K, 3));
            if (!verify_all(C).ok()) o.fail(cat_name(B) + " over the trivial group");
            auto M = decategorify(C);
            ++n;
            if (!verify(M).ok() || !is_commutative(M, 0)) o.fail(cat_name(B) + ": e-graded monoid not commutative");
        }
        if (o.ok) o.detail = std::to_string(n) + " categories";
        return o;
    });

    run(10, "path independence", kLimit10, [] {
        Outcome o;
        auto ops = monoidal_ops(semion());
        std::mt19937 rng(kSeed + 10);
        for (int t = 0; t < kWordPairs; ++t) {
            int n = 1 + static_cast<int>(rng() % kMaxLeaves);
            std::vector<int> leaves(n);
            for (auto& x : leaves) x = static_cast<int>(rng() % 2);
            auto all = all_parenthesizations(leaves);
            const auto& a = all[rng() % all.size()];
            const auto& b = all[rng() % all.size()];
            auto p = path_independent_scalar(ops, a, b);
            if (!p) {
                o.fail(a.str() + " -> " + b.str() + ": paths disagree");
                continue;
            }
            if (*p != reassociate(ops, a, b) || *p != random_path_scalar(ops, a, b, rng()))
                o.fail(a.str() + " -> " + b.str() + ": evaluators disagree");
        }
        if (o.ok) o.detail = std::to_string(kWordPairs) + " word pairs";
        return o;
    });

    std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria" : std::string("all criteria pass"))
              << std::endl;
    return failures ? 1 : 0;
}
