#include "gcb/cochain.hpp"

#include <map>

#include "gcb/pointed_cat.hpp"
#include "gcb/smith.hpp"

namespace gcb {

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Matrix of d: C^n -> C^{n+1} over Z. Columns are the degree-n tuples in
// `cols` (indices into G^n); rows are all degree-(n+1) tuples.
IntMatrix d_matrix(const FiniteGroup& G, int n, const std::vector<int>& cols) {
    const long rows = ipow(G.order, n + 1);
    std::vector<int> where(ipow(G.order, n), -1);
    for (std::size_t j = 0; j < cols.size(); ++j) where[cols[j]] = static_cast<int>(j);
    IntMatrix M(rows, std::vector<long>(cols.size(), 0));
    Cochain shape(G, FiniteAbelianGroup{}, n + 1);
    Cochain low(G, FiniteAbelianGroup{}, n);
    for (long r = 0; r < rows; ++r) {
        auto t = shape.args(r);
        auto bump = [&](const std::vector<int>& s, long sign) {
            int w = where[low.index(s)];
            if (w >= 0) M[r][w] += sign;
        };
        bump(std::vector<int>(t.begin() + 1, t.end()), 1);
        for (int i = 0; i < n; ++i) {
            std::vector<int> s;
            for (int j = 0; j < i; ++j) s.push_back(t[j]);
            s.push_back(G.mul(t[i], t[i + 1]));
            for (int j = i + 2; j <= n; ++j) s.push_back(t[j]);
            bump(s, (i % 2 == 0) ? -1 : 1);
        }
        bump(std::vector<int>(t.begin(), t.begin() + n), (n % 2 == 0) ? -1 : 1);
    }
    return M;
}

std::vector<int> tuple_indices(const FiniteGroup& G, int n, bool normalized) {
    Cochain shape(G, FiniteAbelianGroup{}, n);
    std::vector<int> out;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        auto t = shape.args(i);
        bool ok = true;
        if (normalized)
            for (int x : t) ok = ok && x != G.identity;
        if (ok) out.push_back(static_cast<int>(i));
    }
    return out;
}

// Solve d(x) = target for x supported on `cols`, one cyclic factor at a time.
std::optional<Cochain> solve_d(const Cochain& target, const std::vector<int>& cols) {
    const int n = target.degree - 1;
    Cochain x(target.G, target.K, n);
    IntMatrix M = d_matrix(target.G, n, cols);
    const auto& K = target.K;
    std::vector<std::vector<int>> comps(x.size(), std::vector<int>(K.factors.size(), 0));
    for (std::size_t i = 0; i < K.factors.size(); ++i) {
        std::vector<long> b(target.size());
        for (std::size_t r = 0; r < target.size(); ++r) b[r] = K.component(target.values[r], static_cast<int>(i));
        auto sol = solve_mod(M, static_cast<int>(cols.size()), b, K.factors[i]);
        if (!sol) return std::nullopt;
        for (std::size_t j = 0; j < cols.size(); ++j) comps[cols[j]][i] = static_cast<int>((*sol)[j]);
    }
    for (std::size_t j = 0; j < x.size(); ++j) x.values[j] = K.encode(comps[j]);
    return x;
}

}  // namespace

Cochain::Cochain(FiniteGroup g, FiniteAbelianGroup k, int n) : G(std::move(g)), K(std::move(k)), degree(n) {
    if (n < 0) throw std::invalid_argument("negative cochain degree");
    values.assign(ipow(G.order, n), 0);
}

int Cochain::index(const std::vector<int>& a) const {
    if (static_cast<int>(a.size()) != degree) throw std::invalid_argument("cochain arity mismatch");
    int idx = 0;
    for (int x : a) idx = idx * G.order + x;
    return idx;
}

std::vector<int> Cochain::args(std::size_t idx) const {
    std::vector<int> a(degree);
    for (int i = degree - 1; i >= 0; --i) {
        a[i] = static_cast<int>(idx % G.order);
        idx /= G.order;
    }
    return a;
}

bool Cochain::is_normalized() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (values[i] == 0) continue;
        for (int x : args(i))
            if (x == G.identity) return false;
    }
    return true;
}

Cochain coboundary(const Cochain& c) {
    const int n = c.degree;
    Cochain out(c.G, c.K, n + 1);
    const auto& G = c.G;
    std::vector<int> s(n);
    for (std::size_t r = 0; r < out.size(); ++r) {
        auto t = out.args(r);
        KSum acc(c.K);
        acc.add(c.at(std::vector<int>(t.begin() + 1, t.end())));
        for (int i = 0; i < n; ++i) {
            int k = 0;
            for (int j = 0; j < i; ++j) s[k++] = t[j];
            s[k++] = G.mul(t[i], t[i + 1]);
            for (int j = i + 2; j <= n; ++j) s[k++] = t[j];
            acc.add(c.at(s), (i % 2 == 0) ? -1 : 1);
        }
        acc.add(c.at(std::vector<int>(t.begin(), t.begin() + n)), (n % 2 == 0) ? -1 : 1);
        out.values[r] = acc.value();
    }
    return out;
}

bool is_cocycle(const Cochain& c) {
    for (int v : coboundary(c).values)
        if (v != 0) return false;
    return true;
}

std::optional<Cochain> is_coboundary(const Cochain& c) {
    if (c.degree == 0) {
        if (c.values[0] != 0) return std::nullopt;
        return c;
    }
    return solve_d(c, tuple_indices(c.G, c.degree - 1, false));
}

// ---------------------------------------------------------------------------

AbelianThreeCocycle::AbelianThreeCocycle(FiniteAbelianGroup a, FiniteAbelianGroup k)
    : A(std::move(a)), K(std::move(k)), alpha(A.as_group(), K, 3), beta(A.order * A.order, 0) {}

AbelianThreeCocycle trivial_abelian_cocycle(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K) {
    return AbelianThreeCocycle(A, K);
}

AbelianThreeCocycle semion() {
    AbelianThreeCocycle ac(FiniteAbelianGroup({2}), FiniteAbelianGroup({4}));
    ac.al(1, 1, 1) = 2;
    ac.br(1, 1) = 1;
    return ac;
}

AbelianThreeCocycle bicharacter(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K, const std::vector<int>& beta) {
    AbelianThreeCocycle ac(A, K);
    if (beta.size() != ac.beta.size()) throw std::invalid_argument("beta table has wrong size");
    ac.beta = beta;
    return ac;
}

Cochain pw_pushforward(const Cochain& mu, const AbelianThreeCocycle& ac) {
    if (mu.degree != 2) throw CoefficientMismatch("mu must be a 2-cochain");
    if (!(mu.K == ac.A)) throw CoefficientMismatch("mu must take values in the object group of the braided category");
    const auto& G = mu.G;
    Cochain out(G, ac.K, 4);
    auto M = [&](int x, int y) { return mu(x, y); };
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        auto t = out.args(idx);
        int g = t[0], h = t[1], k = t[2], l = t[3];
        int gh = G.mul(g, h), hk = G.mul(h, k), kl = G.mul(k, l);
        int ghk = G.mul(gh, k), hkl = G.mul(hk, l);
        KSum s(ac.K);
        s.add(ac.br(M(k, l), M(g, h)));
        s.sub(ac.al(M(ghk, l), M(gh, k), M(g, h)));
        s.add(ac.al(M(ghk, l), M(g, hk), M(h, k)));
        s.sub(ac.al(M(g, hkl), M(hk, l), M(h, k)));
        s.add(ac.al(M(g, hkl), M(h, kl), M(k, l)));
        s.sub(ac.al(M(gh, kl), M(g, h), M(k, l)));
        s.add(ac.al(M(gh, kl), M(k, l), M(g, h)));
        out.values[idx] = s.value();
    }
    return out;
}

bool check_obstruction(const Cochain& omega, const Cochain& mu, const AbelianThreeCocycle& ac) {
    if (omega.degree != 3 || !(omega.K == ac.K)) throw CoefficientMismatch("omega must be a K-valued 3-cochain");
    if (!(omega.G == mu.G)) throw CoefficientMismatch("omega and mu live on different groups");
    return coboundary(omega).values == pw_pushforward(mu, ac).values;
}

std::optional<Cochain> solve_obstruction(const Cochain& mu, const AbelianThreeCocycle& ac) {
    Cochain P = pw_pushforward(mu, ac);
    if (auto w = solve_d(P, tuple_indices(mu.G, 3, true))) return w;
    return solve_d(P, tuple_indices(mu.G, 3, false));
}

// ---------------------------------------------------------------------------

int quadratic_form(const AbelianThreeCocycle& ac, int b) {
    if (!check_pentagon(ac).ok() || !check_hexagons(ac).ok())
        throw InvalidAbelianCocycle("quadratic form requested for data failing pentagon/hexagons");
    DualData d = right_dual(ac, b);
    // 1 -coev-> b b* -beta-> b* b -ev-> 1
    return KSum(ac.K).add(d.coev).add(ac.br(b, d.dual)).add(d.ev).value();
}

std::vector<std::vector<int>> enumerate_quadratic_forms(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K,
                                                        long bound) {
    const int n = A.order;
    long total = ipow(K.order, n - 1);
    if (total > bound) throw BoundExceeded("too many candidate functions A -> K");
    std::vector<std::vector<int>> out;
    std::vector<int> q(n, 0);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int x = 1; x < n; ++x) {
            q[x] = static_cast<int>(c % K.order);
            c /= K.order;
        }
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = q[A.neg(x)] == q[x];
        auto b = [&](int x, int y) { return KSum(K).add(q[A.add(x, y)]).sub(q[x]).sub(q[y]).value(); };
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n && ok; ++z) ok = b(A.add(x, y), z) == K.add(b(x, z), b(y, z));
        if (ok) out.push_back(q);
    }
    return out;
}

long enumerate_abelian_cocycle_classes(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K, long bound) {
    if (static_cast<long>(A.order) * K.order > bound) throw BoundExceeded("|A|*|K| exceeds the enumeration bound");
    const int n = A.order;
    if (n == 1) return 1;
    // unknowns: alpha on nonzero triples, then beta on nonzero pairs
    std::map<std::vector<int>, int> col;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int c = 1; c < n; ++c) col[{a, b, c}] = static_cast<int>(col.size());
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) col[{a, b}] = static_cast<int>(col.size());
    const int cols = static_cast<int>(col.size());
    auto put = [&](std::vector<long>& row, std::vector<int> key, long s) {
        for (int x : key)
            if (x == 0) return;
        row[col.at(key)] += s;
    };

    IntMatrix L;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    std::vector<long> row(cols, 0);
                    put(row, {b, c, d}, 1);
                    put(row, {A.add(a, b), c, d}, -1);
                    put(row, {a, A.add(b, c), d}, 1);
                    put(row, {a, b, A.add(c, d)}, -1);
                    put(row, {a, b, c}, 1);
                    L.push_back(std::move(row));
                }
                std::vector<long> h1(cols, 0), h2(cols, 0);
                put(h1, {a, b, c}, 1);
                put(h1, {a, A.add(b, c)}, 1);
                put(h1, {b, c, a}, 1);
                put(h1, {a, b}, -1);
                put(h1, {b, a, c}, -1);
                put(h1, {a, c}, -1);
                put(h2, {a, b, c}, -1);
                put(h2, {A.add(a, b), c}, 1);
                put(h2, {c, a, b}, -1);
                put(h2, {b, c}, -1);
                put(h2, {a, c, b}, 1);
                put(h2, {a, c}, -1);
                L.push_back(std::move(h1));
                L.push_back(std::move(h2));
            }

    // gauge action of a normalised 2-cochain f: alpha -> alpha - df, beta -> beta + f(a,b) - f(b,a)
    std::map<std::pair<int, int>, int> fcol;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) fcol[{a, b}] = static_cast<int>(fcol.size());
    const int fcols = static_cast<int>(fcol.size());
    IntMatrix D(cols, std::vector<long>(fcols, 0));
    auto fput = [&](int row, int a, int b, long s) {
        if (a != 0 && b != 0) D[row][fcol.at({a, b})] += s;
    };
    for (const auto& [key, r] : col) {
        if (key.size() == 3) {
            int a = key[0], b = key[1], c = key[2];
            fput(r, b, c, -1);
            fput(r, A.add(a, b), c, 1);
            fput(r, a, A.add(b, c), -1);
            fput(r, a, b, 1);
        } else {
            fput(r, key[0], key[1], 1);
            fput(r, key[1], key[0], -1);
        }
    }

    long classes = 1;
    for (int m : K.factors) {
        long z = SmithMod(L, cols, m).kernel_size();
        long stab = SmithMod(D, fcols, m).kernel_size();
        long orbit = ipow(m, fcols) / stab;
        classes *= z / orbit;
    }
    return classes;
}

}  // namespace gcb
