#include "gcb/pointed_cat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <random>

namespace gcb {

MonoidalOps monoidal_ops(const PointedBraidedCategory& cat) {
    MonoidalOps ops;
    ops.K = cat.K;
    ops.unit = 0;
    // own a copy so the ops stay valid after a temporary argument dies
    auto c = std::make_shared<const PointedBraidedCategory>(cat);
    ops.tensor = [c](int x, int y) { return c->A.add(x, y); };
    ops.assoc = [c](int x, int y, int z) { return c->al(x, y, z); };
    ops.lunit = [](int) { return 0; };
    ops.runit = [](int) { return 0; };
    ops.inverse_object = [c](int x) { return c->A.neg(x); };
    return ops;
}

// ---------------------------------------------------------------------------

Word Word::leaf(int x) {
    Word w;
    w.v_ = x;
    return w;
}

Word Word::join(const Word& l, const Word& r) {
    Word w;
    w.l_ = std::make_shared<const Word>(l);
    w.r_ = std::make_shared<const Word>(r);
    return w;
}

Word Word::left_nested(const std::vector<int>& leaves) {
    if (leaves.empty()) throw std::invalid_argument("empty word");
    Word w = leaf(leaves[0]);
    for (std::size_t i = 1; i < leaves.size(); ++i) w = join(w, leaf(leaves[i]));
    return w;
}

Word Word::right_nested(const std::vector<int>& leaves) {
    if (leaves.empty()) throw std::invalid_argument("empty word");
    Word w = leaf(leaves.back());
    for (std::size_t i = leaves.size() - 1; i-- > 0;) w = join(leaf(leaves[i]), w);
    return w;
}

std::vector<int> Word::leaves() const {
    if (is_leaf()) return {v_};
    auto a = l_->leaves();
    auto b = r_->leaves();
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::size_t Word::size() const { return is_leaf() ? 1 : l_->size() + r_->size(); }

std::string Word::str() const {
    if (is_leaf()) return std::to_string(v_);
    return "(" + l_->str() + " " + r_->str() + ")";
}

int word_object(const MonoidalOps& ops, const Word& w) {
    if (w.is_leaf()) return w.value();
    return ops.tensor(word_object(ops, w.left()), word_object(ops, w.right()));
}

namespace {

int fold(const MonoidalOps& ops, const std::vector<int>& xs, std::size_t n) {
    int acc = xs[0];
    for (std::size_t i = 1; i < n; ++i) acc = ops.tensor(acc, xs[i]);
    return acc;
}

// LN(L) (x) LN(R) -> LN(L ++ R)
int merge_normal(const MonoidalOps& ops, int lobj, const std::vector<int>& R, std::size_t rlen) {
    KSum s(ops.K);
    while (rlen > 1) {
        int r = R[rlen - 1];
        int r1 = fold(ops, R, rlen - 1);
        s.sub(ops.assoc(lobj, r1, r));
        --rlen;
    }
    return s.value();
}

int to_ln(const MonoidalOps& ops, const Word& w, std::vector<int>& leaves) {
    if (w.is_leaf()) {
        leaves.push_back(w.value());
        return 0;
    }
    std::vector<int> l, r;
    int sl = to_ln(ops, w.left(), l);
    int sr = to_ln(ops, w.right(), r);
    int sm = merge_normal(ops, fold(ops, l, l.size()), r, r.size());
    leaves = l;
    leaves.insert(leaves.end(), r.begin(), r.end());
    return KSum(ops.K).add(sl).add(sr).add(sm).value();
}

void collect_moves(const MonoidalOps& ops, const Word& w, const std::function<Word(const Word&)>& wrap,
                   std::vector<Move>& out) {
    if (w.is_leaf()) return;
    const Word& L = w.left();
    const Word& R = w.right();
    if (!L.is_leaf()) {  // (xy)z -> x(yz)
        const Word &x = L.left(), &y = L.right();
        int s = ops.assoc(word_object(ops, x), word_object(ops, y), word_object(ops, R));
        out.push_back({wrap(Word::join(x, Word::join(y, R))), s});
    }
    if (!R.is_leaf()) {  // x(yz) -> (xy)z
        const Word &y = R.left(), &z = R.right();
        int s = ops.K.neg(ops.assoc(word_object(ops, L), word_object(ops, y), word_object(ops, z)));
        out.push_back({wrap(Word::join(Word::join(L, y), z)), s});
    }
    collect_moves(ops, L, [&](const Word& n) { return wrap(Word::join(n, R)); }, out);
    collect_moves(ops, R, [&](const Word& n) { return wrap(Word::join(L, n)); }, out);
}

void parenthesize(const std::vector<int>& xs, std::size_t lo, std::size_t hi, std::vector<Word>& out) {
    if (hi - lo == 1) {
        out.push_back(Word::leaf(xs[lo]));
        return;
    }
    for (std::size_t mid = lo + 1; mid < hi; ++mid) {
        std::vector<Word> ls, rs;
        parenthesize(xs, lo, mid, ls);
        parenthesize(xs, mid, hi, rs);
        for (const auto& l : ls)
            for (const auto& r : rs) out.push_back(Word::join(l, r));
    }
}

}  // namespace

int to_left_normal(const MonoidalOps& ops, const Word& w) {
    std::vector<int> leaves;
    return to_ln(ops, w, leaves);
}

int reassociate(const MonoidalOps& ops, const Word& w, const Word& target) {
    if (w.leaves() != target.leaves()) throw LeafMismatch("reassociation between words with different leaves");
    return ops.K.sub(to_left_normal(ops, w), to_left_normal(ops, target));
}

std::vector<Move> elementary_moves(const MonoidalOps& ops, const Word& w) {
    std::vector<Move> out;
    collect_moves(ops, w, [](const Word& n) { return n; }, out);
    return out;
}

std::vector<Word> all_parenthesizations(const std::vector<int>& leaves) {
    std::vector<Word> out;
    if (!leaves.empty()) parenthesize(leaves, 0, leaves.size(), out);
    return out;
}

std::optional<int> path_independent_scalar(const MonoidalOps& ops, const Word& w, const Word& target) {
    if (w.leaves() != target.leaves()) throw LeafMismatch("path between words with different leaves");
    std::map<std::string, int> pot;
    std::deque<Word> todo{w};
    pot[w.str()] = 0;
    while (!todo.empty()) {
        Word cur = todo.front();
        todo.pop_front();
        int p = pot[cur.str()];
        for (const auto& mv : elementary_moves(ops, cur)) {
            int q = ops.K.add(p, mv.scalar);
            auto key = mv.result.str();
            auto it = pot.find(key);
            if (it == pot.end()) {
                pot[key] = q;
                todo.push_back(mv.result);
            } else if (it->second != q) {
                return std::nullopt;
            }
        }
    }
    return pot.at(target.str());
}

int random_path_scalar(const MonoidalOps& ops, const Word& w, const Word& target, unsigned seed) {
    if (w.leaves() != target.leaves()) throw LeafMismatch("path between words with different leaves");
    std::mt19937 rng(seed);
    // random walk, then finish along a shortest path (BFS tree) to target
    Word cur = w;
    int acc = 0;
    std::uniform_int_distribution<int> steps(0, 12);
    for (int i = steps(rng); i > 0; --i) {
        auto mv = elementary_moves(ops, cur);
        if (mv.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, mv.size() - 1);
        const auto& m = mv[pick(rng)];
        acc = ops.K.add(acc, m.scalar);
        cur = m.result;
    }
    std::map<std::string, std::pair<std::string, int>> parent;  // key -> (prev key, scalar prev->key)
    std::map<std::string, Word> words;
    std::deque<Word> todo{cur};
    parent[cur.str()] = {"", 0};
    words.emplace(cur.str(), cur);
    while (!todo.empty() && !parent.count(target.str())) {
        Word x = todo.front();
        todo.pop_front();
        auto mv = elementary_moves(ops, x);
        std::shuffle(mv.begin(), mv.end(), rng);
        for (const auto& m : mv) {
            auto k = m.result.str();
            if (parent.count(k)) continue;
            parent[k] = {x.str(), m.scalar};
            words.emplace(k, m.result);
            todo.push_back(m.result);
        }
    }
    int tail = 0;
    for (std::string k = target.str(); k != cur.str();) {
        const auto& pr = parent.at(k);
        tail = ops.K.add(tail, pr.second);
        k = pr.first;
    }
    return ops.K.add(acc, tail);
}

// ---------------------------------------------------------------------------

Report check_pentagon(const PointedBraidedCategory& cat) {
    Report r;
    Cochain d = coboundary(cat.alpha);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d.values[i] != 0) r.add("pentagon", d.args(i), d.values[i]);
    return r;
}

Report check_hexagons(const PointedBraidedCategory& cat) {
    Report r;
    const auto& A = cat.A;
    const auto ops = monoidal_ops(cat);
    auto L = [](int x) { return Word::leaf(x); };
    auto J = [](const Word& x, const Word& y) { return Word::join(x, y); };
    for (int a = 0; a < A.order; ++a)
        for (int b = 0; b < A.order; ++b)
            for (int c = 0; c < A.order; ++c) {
                // (ab)c -> a(bc) -> (bc)a -> b(ca)  vs  (ab)c -> (ba)c -> b(ac) -> b(ca)
                int lhs = KSum(cat.K)
                              .add(reassociate(ops, J(J(L(a), L(b)), L(c)), J(L(a), J(L(b), L(c)))))
                              .add(cat.br(a, A.add(b, c)))
                              .add(reassociate(ops, J(J(L(b), L(c)), L(a)), J(L(b), J(L(c), L(a)))))
                              .value();
                int rhs = KSum(cat.K)
                              .add(cat.br(a, b))
                              .add(reassociate(ops, J(J(L(b), L(a)), L(c)), J(L(b), J(L(a), L(c)))))
                              .add(cat.br(a, c))
                              .value();
                if (lhs != rhs) r.add("hexagon1", {a, b, c}, cat.K.sub(rhs, lhs));
                // a(bc) -> (ab)c -> c(ab) -> (ca)b  vs  a(bc) -> a(cb) -> (ac)b -> (ca)b
                lhs = KSum(cat.K)
                          .add(reassociate(ops, J(L(a), J(L(b), L(c))), J(J(L(a), L(b)), L(c))))
                          .add(cat.br(A.add(a, b), c))
                          .add(reassociate(ops, J(L(c), J(L(a), L(b))), J(J(L(c), L(a)), L(b))))
                          .value();
                rhs = KSum(cat.K)
                          .add(cat.br(b, c))
                          .add(reassociate(ops, J(L(a), J(L(c), L(b))), J(J(L(a), L(c)), L(b))))
                          .add(cat.br(a, c))
                          .value();
                if (lhs != rhs) r.add("hexagon2", {a, b, c}, cat.K.sub(rhs, lhs));
            }
    return r;
}

bool is_bilinear(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K, const std::vector<int>& beta) {
    const int n = A.order;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (beta[A.add(a, b) * n + c] != K.add(beta[a * n + c], beta[b * n + c])) return false;
                if (beta[a * n + A.add(b, c)] != K.add(beta[a * n + b], beta[a * n + c])) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------

DualData right_dual(const MonoidalOps& ops, int x) {
    DualData d;
    d.x = x;
    d.dual = ops.inverse_object(x);
    if (ops.tensor(x, d.dual) != ops.unit || ops.tensor(d.dual, x) != ops.unit)
        throw NoSolution("object has no inverse object");
    d.coev = 0;
    // first zig-zag: -lambda(x) + coev + a(x,x*,x) + ev + rho(x) = 0
    d.ev = KSum(ops.K).add(ops.lunit(x)).sub(d.coev).sub(ops.assoc(x, d.dual, x)).sub(ops.runit(x)).value();
    if (!check_snake(ops, d)) throw NoSolution("right dual: zig-zag equations are inconsistent");
    return d;
}

DualData right_dual(const PointedBraidedCategory& cat, int x) { return right_dual(monoidal_ops(cat), x); }

std::pair<int, int> snake_defects(const MonoidalOps& ops, const DualData& d) {
    const int x = d.x, y = d.dual;
    if (!d.left) {
        // x -> 1x -> (x y)x -> x(y x) -> x1 -> x
        int s1 = KSum(ops.K).sub(ops.lunit(x)).add(d.coev).add(ops.assoc(x, y, x)).add(d.ev).add(ops.runit(x)).value();
        // y -> y1 -> y(x y) -> (y x)y -> 1y -> y
        int s2 = KSum(ops.K).sub(ops.runit(y)).add(d.coev).sub(ops.assoc(y, x, y)).add(d.ev).add(ops.lunit(y)).value();
        return {s1, s2};
    }
    // x -> x1 -> x(y x) -> (x y)x -> 1x -> x
    int s1 = KSum(ops.K).sub(ops.runit(x)).add(d.coev).sub(ops.assoc(x, y, x)).add(d.ev).add(ops.lunit(x)).value();
    // y -> 1y -> (y x)y -> y(x y) -> y1 -> y
    int s2 = KSum(ops.K).sub(ops.lunit(y)).add(d.coev).add(ops.assoc(y, x, y)).add(d.ev).add(ops.runit(y)).value();
    return {s1, s2};
}

bool check_snake(const MonoidalOps& ops, const DualData& d) {
    auto [a, b] = snake_defects(ops, d);
    return a == 0 && b == 0;
}

}  // namespace gcb
