#include "gcb/graymonoid.hpp"

#include <sstream>

namespace gcb {

namespace {

bool gray_sizes_ok(const PointedGrayMonoid& M, Report& r) {
    const int n = M.labels, g = M.G.order, cells = M.cells();
    auto chk = [&](const std::vector<int>& v, std::size_t want, int range, const char* name) {
        if (v.size() != want) {
            r.add("typing", {}, 0, std::string(name) + " table has wrong size");
            return false;
        }
        for (int x : v)
            if (x < 0 || x >= range) {
                r.add("typing", {}, 0, std::string(name) + " entry out of range");
                return false;
            }
        return true;
    };
    return n >= 1 && chk(M.label_grade, n, g, "label grade") && chk(M.id_label, g, n, "identity") &&
           chk(M.comp, static_cast<std::size_t>(g) * n * n, n, "composition") &&
           chk(M.L, static_cast<std::size_t>(g) * cells, cells, "left tensor") &&
           chk(M.R, static_cast<std::size_t>(g) * cells, cells, "right tensor") &&
           chk(M.phi, static_cast<std::size_t>(cells) * cells, M.K.order, "interchanger");
}

}  // namespace

Report verify_gray(const PointedGrayMonoid& M, const VerifyOptions& opt) {
    Report r;
    r.exhaustive = opt.exhaustive;
    if (!gray_sizes_ok(M, r)) return r;
    const auto& G = M.G;
    const auto& K = M.K;
    const int cells = M.cells();
    const int e = G.identity;

    // (D1) strict 2-category: composition is graded, associative and unital
    for (int g = 0; g < G.order; ++g) {
        if (M.label_grade[M.id_label[g]] != e) r.add("D1", {g}, 0, "identity 1-cell is not an endomorphism");
    }
    if (!r.ok()) return r;
    for (int x = 0; x < cells; ++x) {
        if (M.compose(M.id(M.tgt(x)), x) != x || M.compose(x, M.id(M.src(x))) != x) r.add("D1", {x}, 0, "unit law");
        for (int yl = 0; yl < M.labels; ++yl) {
            int y = M.cell(M.tgt(x), yl);
            int yx = M.compose(y, x);
            if (M.label_grade[M.label(yx)] != G.mul(M.label_grade[yl], M.label_grade[M.label(x)]))
                r.add("D1", {x, y}, 0, "composite has the wrong target");
            for (int zl = 0; zl < M.labels; ++zl) {
                int z = M.cell(M.tgt(y), zl);
                if (M.compose(z, yx) != M.compose(M.compose(z, y), x)) r.add("D1", {x, y, z}, 0, "associativity");
            }
        }
    }
    // (C1)/(C2) whiskering by 0-cells: typed, strict action, strictly functorial
    for (int k = 0; k < G.order; ++k)
        for (int x = 0; x < cells; ++x) {
            int lx = M.left(k, x), rx = M.right(k, x);
            if (M.src(lx) != G.mul(k, M.src(x)) || M.tgt(lx) != G.mul(k, M.tgt(x))) r.add("C1", {k, x}, 0, "left whiskering typing");
            if (M.src(rx) != G.mul(M.src(x), k) || M.tgt(rx) != G.mul(M.tgt(x), k)) r.add("C1", {k, x}, 0, "right whiskering typing");
        }
    if (!r.ok()) return r;
    for (int x = 0; x < cells; ++x) {
        if (M.left(e, x) != x || M.right(e, x) != x) r.add("C2", {x}, 0, "unit 0-cell acts trivially");
        for (int a = 0; a < G.order; ++a)
            for (int b = 0; b < G.order; ++b) {
                if (M.left(a, M.left(b, x)) != M.left(G.mul(a, b), x)) r.add("C2", {a, b, x}, 0, "L_a L_b = L_ab");
                if (M.right(b, M.right(a, x)) != M.right(G.mul(a, b), x)) r.add("C2", {a, b, x}, 0, "R_b R_a = R_ab");
                if (M.left(a, M.right(b, x)) != M.right(b, M.left(a, x))) r.add("C2", {a, b, x}, 0, "L_a R_b = R_b L_a");
            }
    }
    for (int k = 0; k < G.order; ++k) {
        for (int g = 0; g < G.order; ++g) {
            if (M.left(k, M.id(g)) != M.id(G.mul(k, g))) r.add("C2", {k, g}, 0, "L_k preserves identities");
            if (M.right(k, M.id(g)) != M.id(G.mul(g, k))) r.add("C2", {k, g}, 0, "R_k preserves identities");
        }
        for (int x = 0; x < cells; ++x)
            for (int yl = 0; yl < M.labels; ++yl) {
                int y = M.cell(M.tgt(x), yl);
                if (M.left(k, M.compose(y, x)) != M.compose(M.left(k, y), M.left(k, x)))
                    r.add("C2", {k, x, y}, 0, "L_k preserves composition");
                if (M.right(k, M.compose(y, x)) != M.compose(M.right(k, y), M.right(k, x)))
                    r.add("C2", {k, x, y}, 0, "R_k preserves composition");
            }
    }
    if (!r.ok()) return r;

    for (int x = 0; x < cells; ++x) {
        const int a = M.src(x), b = M.tgt(x);
        for (int y = 0; y < cells; ++y) {
            const int c = M.src(y), d = M.tgt(y);
            // (C5) both nudged composites a c -> b d are the same 1-cell
            int first = M.compose(M.right(d, x), M.left(a, y));
            int second = M.compose(M.left(b, y), M.right(c, x));
            if (first != second) r.add("C5", {x, y}, 0, "interchanger between different 1-cells");
        }
    }
    if (!r.ok()) return r;

    auto chk = [&](const char* ax, std::vector<int> w, int lhs, int rhs) {
        if (lhs != rhs) r.add(ax, std::move(w), K.sub(rhs, lhs));
    };
    for (int x = 0; x < cells; ++x) {
        for (int g = 0; g < G.order; ++g) {
            chk("C3", {x, M.id(g), 0}, M.ph(x, M.id(g)), 0);
            chk("C3", {M.id(g), x, 1}, M.ph(M.id(g), x), 0);
        }
        for (int y = 0; y < cells; ++y) {
            // (C4) phi respects vertical composition in each variable
            for (int l = 0; l < M.labels; ++l) {
                int x2 = M.cell(M.tgt(x), l);
                chk("C4", {x, x2, y, 0}, M.ph(M.compose(x2, x), y), K.add(M.ph(x2, y), M.ph(x, y)));
                int y2 = M.cell(M.tgt(y), l);
                chk("C4", {x, y, y2, 1}, M.ph(x, M.compose(y2, y)), K.add(M.ph(x, y), M.ph(x, y2)));
            }
            // (C6) phi respects the tensor product with 0-cells
            for (int k = 0; k < G.order; ++k) {
                chk("C6", {k, x, y, 0}, M.ph(M.left(k, x), y), M.ph(x, y));
                chk("C6", {k, x, y, 1}, M.ph(M.right(k, x), y), M.ph(x, M.left(k, y)));
                chk("C6", {k, x, y, 2}, M.ph(x, M.right(k, y)), M.ph(x, y));
            }
        }
    }
    return r;
}

PointedGrayMonoid from_gcrossed_unchecked(const GCrossedPointedCategory& C) {
    PointedGrayMonoid M;
    M.G = C.G;
    M.K = C.K;
    const int n = C.n, go = C.G.order;
    M.labels = n;
    M.label_grade = C.grade;
    M.id_label.assign(go, C.unit);
    M.comp.assign(static_cast<std::size_t>(go) * n * n, 0);
    for (int g = 0; g < go; ++g)
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) M.comp[(g * n + y) * n + x] = C.T(y, x);  // b o a := b (x) a
    const int cells = M.cells();
    M.L.assign(static_cast<std::size_t>(go) * cells, 0);
    M.R.assign(static_cast<std::size_t>(go) * cells, 0);
    for (int k = 0; k < go; ++k)
        for (int c = 0; c < cells; ++c) {
            int g = M.src(c), x = M.label(c);
            M.L[k * cells + c] = M.cell(C.G.mul(k, g), C.F(k, x));  // id_k (x) a := F_k(a)
            M.R[k * cells + c] = M.cell(C.G.mul(g, k), x);
        }
    M.phi.assign(static_cast<std::size_t>(cells) * cells, 0);
    for (int x = 0; x < cells; ++x)
        for (int y = 0; y < cells; ++y) M.phi[x * cells + y] = C.c(M.label(x), C.F(M.src(x), M.label(y)));
    return M;
}

PointedGrayMonoid from_gcrossed(const GCrossedPointedCategory& C) {
    if (!is_strict(C)) throw NotStrict("from_gcrossed needs a strict G-crossed braided category");
    return from_gcrossed_unchecked(C);
}

GCrossedPointedCategory to_gcrossed_unchecked(const PointedGrayMonoid& M) {
    const auto& G = M.G;
    const int e = G.identity;
    auto C = GCrossedPointedCategory::blank(G, M.K, M.label_grade);
    const int n = C.n;
    C.unit = M.id_label[e];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int h = M.label_grade[y];
            // x (x) y := (x (x) id_h) o y, a 1-cell out of e
            C.T(x, y) = M.label(M.compose(M.right(h, M.cell(e, x)), M.cell(e, y)));
            C.c(x, y) = M.ph(M.cell(e, x), M.cell(e, y));
        }
    for (int g = 0; g < G.order; ++g)
        for (int b = 0; b < n; ++b) C.F(g, b) = M.label(M.right(G.inv(g), M.left(g, M.cell(e, b))));
    return C;
}

GCrossedPointedCategory to_gcrossed(const PointedGrayMonoid& M) {
    Report r = verify_gray(M);
    if (!r.ok()) throw GrayAxiomFailure("Gray-monoid axioms fail:\n" + r.str(), r);
    return to_gcrossed_unchecked(M);
}

std::optional<std::string> first_difference(const GCrossedPointedCategory& a, const GCrossedPointedCategory& b) {
    if (!(a.G == b.G)) return std::string("grading group");
    if (!(a.K == b.K)) return std::string("scalar group");
    if (a.n != b.n) return "object count: " + std::to_string(a.n) + " vs " + std::to_string(b.n);
    if (a.unit != b.unit) return "unit: " + std::to_string(a.unit) + " vs " + std::to_string(b.unit);
    struct Tab {
        const char* name;
        const std::vector<int>& x;
        const std::vector<int>& y;
        std::vector<int> dims;
    };
    const int n = a.n, g = a.G.order;
    const Tab tabs[] = {
        {"grade", a.grade, b.grade, {n}},         {"tensor", a.tensor, b.tensor, {n, n}},
        {"assoc", a.assoc, b.assoc, {n, n, n}},   {"lunit", a.lunit, b.lunit, {n}},
        {"runit", a.runit, b.runit, {n}},         {"act", a.act, b.act, {g, n}},
        {"iunit", a.iunit, b.iunit, {g}},         {"psi", a.psi, b.psi, {g, n, n}},
        {"muact", a.muact, b.muact, {g, g, n}},   {"iota", a.iota, b.iota, {n}},
        {"braid", a.braid, b.braid, {n, n}},
    };
    for (const auto& t : tabs) {
        if (t.x.size() != t.y.size()) return std::string(t.name) + " size";
        for (std::size_t i = 0; i < t.x.size(); ++i) {
            if (t.x[i] == t.y[i]) continue;
            std::vector<int> idx(t.dims.size());
            std::size_t rest = i;
            for (std::size_t d = t.dims.size(); d-- > 0;) {
                idx[d] = static_cast<int>(rest % t.dims[d]);
                rest /= t.dims[d];
            }
            std::ostringstream os;
            os << t.name << "[";
            for (std::size_t d = 0; d < idx.size(); ++d) os << (d ? "," : "") << idx[d];
            os << "]: " << t.x[i] << " vs " << t.y[i];
            return os.str();
        }
    }
    return std::nullopt;
}

RoundTrip roundtrip_check(const GCrossedPointedCategory& C) {
    // unchecked on purpose: a perturbed C should surface as a localized
    // mismatch, not as an axiom failure of the intermediate Gray-monoid
    if (!is_strict(C)) throw NotStrict("round trip needs a strict G-crossed braided category");
    auto back = to_gcrossed_unchecked(from_gcrossed_unchecked(C));
    if (auto diff = first_difference(back, C)) throw RoundTripMismatch("round trip differs at " + *diff);
    RoundTrip rt{back, identity_functor(C), {}};
    rt.identity.target = back;
    rt.functor_report = verify_functor(rt.identity);
    return rt;
}

}  // namespace gcb
