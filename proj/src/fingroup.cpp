#include "gcb/fingroup.hpp"

#include <numeric>
#include <sstream>

namespace gcb {

std::string Report::str() const {
    std::ostringstream os;
    for (const auto& f : failures) {
        os << "(" << f.axiom << ") at (";
        for (std::size_t i = 0; i < f.witness.size(); ++i) os << (i ? "," : "") << f.witness[i];
        os << ") defect " << f.defect;
        if (!f.note.empty()) os << ": " << f.note;
        os << "\n";
    }
    if (total > failures.size()) os << "... " << (total - failures.size()) << " more\n";
    return os.str();
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < a; ++b)
            if (table[a][b] != table[b][a]) return false;
    return true;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> t, std::string name) {
    Report r = check_group_axioms(t);
    if (!r.ok()) throw std::invalid_argument("not a group with identity 0:\n" + r.str());
    FiniteGroup G;
    G.order = static_cast<int>(t.size());
    G.table = std::move(t);
    G.inverse.assign(G.order, 0);
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            if (G.table[a][b] == 0) G.inverse[a] = b;
    G.name = std::move(name);
    return G;
}

Report check_group_axioms(const std::vector<std::vector<int>>& t) {
    Report r;
    const int n = static_cast<int>(t.size());
    if (n == 0) {
        r.add("nonempty", {});
        return r;
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(t[a].size()) != n) {
            r.add("square", {a});
            return r;
        }
        for (int b = 0; b < n; ++b)
            if (t[a][b] < 0 || t[a][b] >= n) {
                r.add("closure", {a, b});
                return r;
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) r.add("associativity", {a, b, c});
    for (int a = 0; a < n; ++a)
        if (t[0][a] != a || t[a][0] != a) r.add("identity", {a}, 0, "0 is not a two-sided unit");
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b) found = t[a][b] == 0 && t[b][a] == 0;
        if (!found) r.add("inverse", {a}, 0, "element " + std::to_string(a) + " has no inverse");
    }
    return r;
}

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup make_trivial() { return make_cyclic(1); }

FiniteGroup make_dihedral(int n) {
    if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
    const int N = 2 * n;
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int k1 = x % n, s1 = x / n, k2 = y % n, s2 = y / n;
            int k = ((k1 + (s1 ? -k2 : k2)) % n + n) % n;
            t[x][y] = k + n * ((s1 + s2) % 2);
        }
    return FiniteGroup::from_table(std::move(t), "D" + std::to_string(n));
}

FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int N = a.order * b.order;
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            t[x][y] = a.mul(x / b.order, y / b.order) * b.order + b.mul(x % b.order, y % b.order);
    return FiniteGroup::from_table(std::move(t), a.name + "x" + b.name);
}

int conjugate(const FiniteGroup& G, int g, int h) { return G.conj(g, h); }

std::vector<int> center(const FiniteGroup& G) {
    std::vector<int> z;
    for (int g = 0; g < G.order; ++g) {
        bool central = true;
        for (int h = 0; h < G.order && central; ++h) central = G.mul(g, h) == G.mul(h, g);
        if (central) z.push_back(g);
    }
    return z;
}

// ---------------------------------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> f) : factors(std::move(f)) {
    order = 1;
    for (int m : factors) {
        if (m < 1) throw std::invalid_argument("cyclic factor must be positive");
        order *= m;
    }
}

std::vector<int> FiniteAbelianGroup::decode(int a) const {
    std::vector<int> v(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        v[i] = a % factors[i];
        a /= factors[i];
    }
    return v;
}

int FiniteAbelianGroup::encode(const std::vector<int>& v) const {
    int a = 0, mul = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        int m = factors[i];
        a += ((v[i] % m + m) % m) * mul;
        mul *= m;
    }
    return a;
}

int FiniteAbelianGroup::add(int a, int b) const {
    if (factors.size() == 1) return (a + b) % factors[0];
    int r = 0, mul = 1;
    for (int m : factors) {
        r += ((a % m + b % m) % m) * mul;
        a /= m;
        b /= m;
        mul *= m;
    }
    return r;
}

int FiniteAbelianGroup::neg(int a) const {
    int r = 0, mul = 1;
    for (int m : factors) {
        r += ((m - a % m) % m) * mul;
        a /= m;
        mul *= m;
    }
    return r;
}

int FiniteAbelianGroup::scale(long k, int a) const {
    int r = 0, mul = 1;
    for (int m : factors) {
        long x = (k % m) * (a % m) % m;
        r += static_cast<int>((x + m) % m) * mul;
        a /= m;
        mul *= m;
    }
    return r;
}

int FiniteAbelianGroup::component(int a, int i) const {
    for (int j = 0; j < i; ++j) a /= factors[j];
    return a % factors[i];
}

int FiniteAbelianGroup::unit_in(int i) const {
    int mul = 1;
    for (int j = 0; j < i; ++j) mul *= factors[j];
    return factors[i] > 1 ? mul : 0;
}

int FiniteAbelianGroup::additive_order(int a) const {
    int o = 1;
    auto v = decode(a);
    for (std::size_t i = 0; i < v.size(); ++i) {
        int oi = factors[i] / std::gcd(factors[i], v[i]);
        o = std::lcm(o, oi);
    }
    return o;
}

FiniteGroup FiniteAbelianGroup::as_group() const {
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) t[a][b] = add(a, b);
    FiniteGroup G;
    G.order = order;
    G.table = std::move(t);
    G.inverse.resize(order);
    for (int a = 0; a < order; ++a) G.inverse[a] = neg(a);
    G.name = str();
    return G;
}

std::string FiniteAbelianGroup::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(factors[i]);
    return s;
}

KSum& KSum::add(int a, long s) {
    for (std::size_t i = 0; i < v_.size(); ++i) {
        int m = K_.factors[i];
        v_[i] = (v_[i] + s * (a % m)) % m;
        a /= m;
    }
    return *this;
}

int KSum::value() const {
    int r = 0, mul = 1;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        long m = K_.factors[i];
        r += static_cast<int>(((v_[i] % m) + m) % m) * mul;
        mul *= static_cast<int>(m);
    }
    return r;
}

// ---------------------------------------------------------------------------

Report GroupHom::check() const {
    Report r;
    if (static_cast<int>(image.size()) != source.order) {
        r.add("hom-size", {});
        return r;
    }
    for (int a = 0; a < source.order; ++a)
        if (image[a] < 0 || image[a] >= target.order) {
            r.add("hom-range", {a});
            return r;
        }
    for (int a = 0; a < source.order; ++a)
        for (int b = 0; b < source.order; ++b)
            if (image[source.mul(a, b)] != target.mul(image[a], image[b])) r.add("hom", {a, b});
    if (image[source.identity] != target.identity) r.add("hom-unit", {});
    return r;
}

KernelResult kernel_normal(const GroupHom& hom) {
    Report r = hom.check();
    if (!r.ok()) throw InvalidHom("invalid homomorphism:\n" + r.str());
    KernelResult k;
    std::vector<char> in(hom.source.order, 0);
    for (int g = 0; g < hom.source.order; ++g)
        if (hom.image[g] == hom.target.identity) {
            k.elements.push_back(g);
            in[g] = 1;
        }
    bool closed = true;
    for (int a : k.elements) {
        for (int b : k.elements) closed = closed && in[hom.source.mul(a, b)];
        for (int g = 0; g < hom.source.order; ++g) closed = closed && in[hom.source.conj(g, a)];
    }
    k.normal = closed;
    return k;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_x(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == 'x' || ch == '*') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_positive(const std::string& s, const std::string& whole) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad group spec '" + whole + "'");
    }
    if (pos != s.size() || v < 1) throw std::invalid_argument("bad group spec '" + whole + "'");
    return v;
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
    FiniteGroup G = make_trivial();
    bool first = true;
    for (const auto& p : split_x(spec)) {
        FiniteGroup H;
        if (p == "1" || p == "e") {
            H = make_trivial();
        } else if (!p.empty() && (p[0] == 'Z' || p[0] == 'C')) {
            H = make_cyclic(parse_positive(p.substr(1), spec));
        } else if (!p.empty() && p[0] == 'D') {
            H = make_dihedral(parse_positive(p.substr(1), spec));
        } else {
            throw std::invalid_argument("bad group spec '" + spec + "'");
        }
        G = first ? H : make_product(G, H);
        first = false;
    }
    return G;
}

FiniteAbelianGroup parse_abelian_spec(const std::string& spec) {
    std::vector<int> f;
    for (const auto& p : split_x(spec)) {
        if (p == "1" || p == "0") continue;
        if (p.empty() || (p[0] != 'Z' && p[0] != 'C')) throw std::invalid_argument("bad abelian group spec '" + spec + "'");
        int n = parse_positive(p.substr(1), spec);
        if (n > 1) f.push_back(n);
    }
    return FiniteAbelianGroup(f);
}

}  // namespace gcb
