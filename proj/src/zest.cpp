// Zesting: the G-crossed braided extension of a pointed braided category B
// determined by a 2-cocycle mu in Z^2(G, A) and omega with d(omega) equal to
// the pushforward of mu along (alpha, beta).
//
// Objects are pairs (g, a) with tensor (g,a)(h,b) = (gh, mu(g,h) + a + b).
// The associator is read off mechanically: write both bracketings as words
// in B, reassociate to left normal form, apply omega to the two mu-leaves
// and braid mu(h,k) past a.
//
// The action and braiding are fixed by the sections s_g = (g, 0): F_g is
// conjugation by s_g and the braiding of s_g with anything is declared to be
// the identity (sigma = 0). Everything else then follows from the heptagon
// axioms, except for a free choice tau(a, k) = c((e,a), s_k). That choice is
// affine-linear in every axiom, so we solve for it exactly (Smith form per
// cyclic factor of K). sigma is opened up as well if tau alone has no
// solution.

#include <algorithm>

#include "gcb/gcrossed.hpp"
#include "gcb/smith.hpp"

namespace gcb {

namespace {

struct ZestInput {
    const PointedBraidedCategory& B;
    const FiniteGroup& G;
    const Cochain& mu;
    const Cochain& omega;
};

GCrossedPointedCategory zest_monoidal(const ZestInput& in) {
    const auto& B = in.B;
    const auto& G = in.G;
    const int na = B.A.order;
    std::vector<int> grade(G.order * na);
    for (int x = 0; x < static_cast<int>(grade.size()); ++x) grade[x] = x / na;
    auto C = GCrossedPointedCategory::blank(G, B.K, grade);
    const int n = C.n;
    C.unit = zest_object(G.identity, 0, na);
    auto M = [&](int g, int h) { return in.mu(g, h); };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int g = x / na, a = x % na, h = y / na, b = y % na;
            C.T(x, y) = zest_object(G.mul(g, h), B.A.add(M(g, h), B.A.add(a, b)), na);
        }

    const auto ops = monoidal_ops(B);
    auto L = [](int v) { return Word::leaf(v); };
    auto J = [](const Word& l, const Word& r) { return Word::join(l, r); };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int g = x / na, a = x % na, h = y / na, b = y % na, k = z / na, c = z % na;
                int gh = G.mul(g, h), hk = G.mul(h, k);
                Word xy = J(J(L(M(g, h)), L(a)), L(b));
                Word src = J(J(L(M(gh, k)), xy), L(c));
                Word yz = J(J(L(M(h, k)), L(b)), L(c));
                Word tgt = J(J(L(M(g, hk)), L(a)), yz);
                // after omega the normal form starts P, mu(h,k), a, ...; braid the middle pair
                int P = M(g, hk), m = M(h, k);
                int swap = KSum(B.K).add(B.al(P, m, a)).add(B.br(m, a)).sub(B.al(P, a, m)).value();
                C.a(x, y, z) = KSum(B.K)
                                   .add(to_left_normal(ops, src))
                                   .add(in.omega(g, h, k))
                                   .add(swap)
                                   .sub(to_left_normal(ops, tgt))
                                   .value();
            }

    // F_g(h, b) = s_g (h,b) s_g^{-1}
    for (int g = 0; g < G.order; ++g) {
        int gi = G.inv(g);
        for (int y = 0; y < n; ++y) {
            int h = y / na, b = y % na;
            int gh = G.mul(g, h);
            int v = KSum(B.A).add(M(g, h)).add(b).add(M(gh, gi)).sub(M(g, gi)).value();
            C.F(g, y) = zest_object(G.mul(gh, gi), v, na);
        }
    }
    return C;
}

// tau indexed a*|G| + k; sigma indexed g*n + z
void fill_braided_action(GCrossedPointedCategory& C, const ZestInput& in, const std::vector<int>& tau,
                         const std::vector<int>& sigma) {
    const auto& B = in.B;
    const auto& G = C.G;
    const auto& K = C.K;
    const int na = B.A.order, n = C.n;
    auto s = [&](int g) { return zest_object(g, 0, na); };
    auto ea = [&](int a) { return zest_object(G.identity, a, na); };
    auto sig = [&](int g, int z) { return sigma[g * n + z]; };

    // c((e,a), (k,b)) with (k,b) = (e,b) s_k
    std::vector<int> c0(na * n, 0);
    for (int a = 0; a < na; ++a)
        for (int w = 0; w < n; ++w) {
            int k = w / na, b = w % na;
            int x = ea(a), eb = ea(b), sk = s(k);
            c0[a * n + w] = KSum(K)
                                .sub(C.a(x, eb, sk))
                                .add(B.br(a, b))
                                .add(C.a(eb, x, sk))
                                .add(tau[a * G.order + k])
                                .sub(C.a(eb, sk, x))
                                .value();
        }
    // c((g,a), z) with (g,a) = (e,a) s_g
    for (int x = 0; x < n; ++x) {
        int g = x / na, a = x % na;
        for (int z = 0; z < n; ++z) {
            int Fz = C.F(g, z);
            C.c(x, z) = KSum(K)
                            .add(C.a(ea(a), s(g), z))
                            .add(sig(g, z))
                            .sub(C.a(ea(a), Fz, s(g)))
                            .add(c0[a * n + Fz])
                            .add(C.a(Fz, ea(a), s(g)))
                            .value();
        }
    }
    // psi from (beta2) at x = s_g
    for (int g = 0; g < G.order; ++g) {
        int sg = s(g);
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int Fy = C.F(g, y), Fz = C.F(g, z);
                C.ps(g, y, z) = KSum(K)
                                    .add(C.a(sg, y, z))
                                    .add(sig(g, C.T(y, z)))
                                    .add(C.a(Fy, Fz, sg))
                                    .sub(sig(g, y))
                                    .sub(C.a(Fy, sg, z))
                                    .sub(sig(g, z))
                                    .value();
            }
    }
    // mu-action from (beta3) at x = s_g, y = s_h
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h) {
            int sg = s(g), sh = s(h), sgh = C.T(sg, sh);
            for (int z = 0; z < n; ++z) {
                int Fhz = C.F(h, z);
                C.mu(g, h, z) = KSum(K)
                                    .sub(C.a(sg, sh, z))
                                    .add(C.c(sgh, z))
                                    .sub(C.a(C.F(g, Fhz), sg, sh))
                                    .sub(sig(h, z))
                                    .add(C.a(sg, Fhz, sh))
                                    .sub(sig(g, Fhz))
                                    .value();
            }
        }
}

std::vector<int> all_defects(const GCrossedPointedCategory& C) {
    std::vector<int> d;
    AxiomSink sink = [&](const char*, const std::vector<int>&, int lhs, int rhs) { d.push_back(C.K.sub(rhs, lhs)); };
    visit_monoidal(C, sink);
    visit_action(C, sink);
    visit_braiding(C, sink);
    return d;
}

struct Unknown {
    bool is_tau;
    int index;
};

// Solve for the free braiding data. Returns false if the affine system has
// no solution with the given unknowns.
bool solve_gauge(GCrossedPointedCategory& C, const ZestInput& in, bool open_sigma) {
    const auto& G = C.G;
    const auto& K = C.K;
    const int na = in.B.A.order, n = C.n;
    std::vector<int> tau(na * G.order, 0), sigma(G.order * n, 0);
    std::vector<Unknown> unknowns;
    for (int a = 1; a < na; ++a)
        for (int k = 0; k < G.order; ++k)
            if (k != G.identity) unknowns.push_back({true, a * G.order + k});
    if (open_sigma)
        for (int g = 0; g < G.order; ++g)
            for (int z = 0; z < n; ++z)
                if (g != G.identity && z != C.unit) unknowns.push_back({false, g * n + z});

    fill_braided_action(C, in, tau, sigma);
    const auto d0 = all_defects(C);
    bool clean = std::all_of(d0.begin(), d0.end(), [](int v) { return v == 0; });
    if (clean) return true;
    if (unknowns.empty() || K.factors.empty()) return false;

    std::vector<int> solved_tau = tau, solved_sigma = sigma;
    for (std::size_t f = 0; f < K.factors.size(); ++f) {
        const int unit = K.unit_in(static_cast<int>(f));
        const long m = K.factors[f];
        std::vector<std::vector<long>> cols;
        for (const auto& u : unknowns) {
            (u.is_tau ? tau : sigma)[u.index] = unit;
            fill_braided_action(C, in, tau, sigma);
            auto d = all_defects(C);
            (u.is_tau ? tau : sigma)[u.index] = 0;
            std::vector<long> col(d.size());
            for (std::size_t i = 0; i < d.size(); ++i)
                col[i] = (K.component(d[i], static_cast<int>(f)) - K.component(d0[i], static_cast<int>(f)) + m) % m;
            cols.push_back(std::move(col));
        }
        // keep only rows that carry information
        IntMatrix rows;
        std::vector<long> rhs;
        for (std::size_t i = 0; i < d0.size(); ++i) {
            long b = (m - K.component(d0[i], static_cast<int>(f))) % m;
            bool any = b != 0;
            std::vector<long> row(unknowns.size());
            for (std::size_t j = 0; j < unknowns.size(); ++j) {
                row[j] = cols[j][i];
                any = any || row[j] != 0;
            }
            if (any) {
                rows.push_back(std::move(row));
                rhs.push_back(b);
            }
        }
        if (rows.empty()) continue;
        auto sol = solve_mod(rows, static_cast<int>(unknowns.size()), rhs, m);
        if (!sol) return false;
        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            auto& tab = unknowns[j].is_tau ? solved_tau : solved_sigma;
            int& slot = tab[unknowns[j].index];
            slot = K.add(slot, K.scale((*sol)[j], unit));
        }
    }
    fill_braided_action(C, in, solved_tau, solved_sigma);
    auto d = all_defects(C);
    return std::all_of(d.begin(), d.end(), [](int v) { return v == 0; });
}

void check_shapes(const PointedBraidedCategory& B, const FiniteGroup& G, const Cochain& mu, const Cochain& omega) {
    if (mu.degree != 2 || !(mu.G == G) || !(mu.K == B.A))
        throw CoefficientMismatch("mu must be a 2-cochain on G with values in the object group");
    if (omega.degree != 3 || !(omega.G == G) || !(omega.K == B.K))
        throw CoefficientMismatch("omega must be a 3-cochain on G with values in the scalars");
}

}  // namespace

GCrossedPointedCategory zest_unchecked(const PointedBraidedCategory& B, const FiniteGroup& G, const Cochain& mu,
                                       const Cochain& omega) {
    check_shapes(B, G, mu, omega);
    ZestInput in{B, G, mu, omega};
    auto C = zest_monoidal(in);
    fill_braided_action(C, in, std::vector<int>(B.A.order * G.order, 0), std::vector<int>(G.order * C.n, 0));
    return C;
}

GCrossedPointedCategory zest(const PointedBraidedCategory& B, const FiniteGroup& G, const Cochain& mu,
                             const Cochain& omega) {
    check_shapes(B, G, mu, omega);
    if (!check_pentagon(B).ok() || !check_hexagons(B).ok())
        throw InvalidAbelianCocycle("braided category fails pentagon or hexagons");
    if (!is_cocycle(mu)) throw NotACocycle("mu is not a 2-cocycle");
    if (!mu.is_normalized() || !omega.is_normalized()) throw NotACocycle("mu and omega must be normalized");
    if (!check_obstruction(omega, mu, B)) {
        Cochain obs = coboundary(omega);
        Cochain P = pw_pushforward(mu, B);
        for (std::size_t i = 0; i < obs.size(); ++i) obs.values[i] = B.K.sub(obs.values[i], P.values[i]);
        throw ObstructionNonvanishing("d(omega) differs from the pushforward of mu", obs);
    }
    ZestInput in{B, G, mu, omega};
    auto C = zest_monoidal(in);
    if (solve_gauge(C, in, false)) return C;
    if (solve_gauge(C, in, true)) return C;
    throw std::logic_error("zesting: no braiding data completes the construction");
}

}  // namespace gcb
