#include "gcb/crossed_monoid.hpp"

namespace gcb {

GCrossedMonoid group_as_crossed_monoid(const FiniteGroup& G) {
    GCrossedMonoid M;
    M.G = G;
    M.n = G.order;
    M.grade.resize(M.n);
    M.mult.resize(M.n * M.n);
    M.act.resize(G.order * M.n);
    for (int x = 0; x < M.n; ++x) {
        M.grade[x] = x;
        for (int y = 0; y < M.n; ++y) M.mult[x * M.n + y] = G.mul(x, y);
    }
    for (int g = 0; g < G.order; ++g)
        for (int x = 0; x < M.n; ++x) M.act[g * M.n + x] = G.conj(g, x);
    M.unit = G.identity;
    return M;
}

Report verify(const GCrossedMonoid& M) {
    Report r;
    const auto& G = M.G;
    const int n = M.n;
    if (static_cast<int>(M.grade.size()) != n || static_cast<int>(M.mult.size()) != n * n ||
        static_cast<int>(M.act.size()) != G.order * n) {
        r.add("shape", {});
        return r;
    }
    for (int v : M.mult)
        if (v < 0 || v >= n) {
            r.add("shape", {}, 0, "multiplication leaves the carrier");
            return r;
        }
    for (int v : M.act)
        if (v < 0 || v >= n) {
            r.add("shape", {}, 0, "action leaves the carrier");
            return r;
        }
    if (M.grade[M.unit] != G.identity) r.add("unit-grade", {M.unit});
    for (int x = 0; x < n; ++x) {
        if (M.m(M.unit, x) != x || M.m(x, M.unit) != x) r.add("unit", {x});
        for (int y = 0; y < n; ++y) {
            int xy = M.m(x, y);
            if (M.grade[xy] != G.mul(M.grade[x], M.grade[y])) r.add("grading", {x, y});
            for (int z = 0; z < n; ++z)
                if (M.m(xy, z) != M.m(x, M.m(y, z))) r.add("associativity", {x, y, z});
            // m_g n_h = pi_g(n_h) m_g
            if (xy != M.m(M.pi(M.grade[x], y), x)) r.add("crossed-commutation", {x, y});
        }
    }
    for (int g = 0; g < G.order; ++g) {
        if (M.pi(g, M.unit) != M.unit) r.add("action-unit", {g});
        for (int x = 0; x < n; ++x) {
            if (M.grade[M.pi(g, x)] != G.conj(g, M.grade[x])) r.add("action-grading", {g, x});
            if (g == G.identity && M.pi(g, x) != x) r.add("action-identity", {x});
            for (int h = 0; h < G.order; ++h)
                if (M.pi(g, M.pi(h, x)) != M.pi(G.mul(g, h), x)) r.add("action-composition", {g, h, x});
            for (int y = 0; y < n; ++y)
                if (M.pi(g, M.m(x, y)) != M.m(M.pi(g, x), M.pi(g, y))) r.add("action-multiplicative", {g, x, y});
        }
    }
    return r;
}

bool is_commutative(const GCrossedMonoid& M, int g) {
    for (int x = 0; x < M.n; ++x)
        for (int y = 0; y < M.n; ++y)
            if (M.grade[x] == g && M.grade[y] == g && M.m(x, y) != M.m(y, x)) return false;
    return true;
}

}  // namespace gcb
