#include "gcb/gcrossed.hpp"

#include <future>
#include <memory>
#include <numeric>

#include "gcb/crossed_monoid.hpp"

namespace gcb {

GCrossedPointedCategory GCrossedPointedCategory::blank(FiniteGroup G, FiniteAbelianGroup K, std::vector<int> grade) {
    GCrossedPointedCategory C;
    const int n = static_cast<int>(grade.size());
    const int g = G.order;
    C.G = std::move(G);
    C.K = std::move(K);
    C.n = n;
    C.grade = std::move(grade);
    C.unit = 0;
    C.tensor.assign(n * n, 0);
    C.assoc.assign(n * n * n, 0);
    C.lunit.assign(n, 0);
    C.runit.assign(n, 0);
    C.act.assign(g * n, 0);
    C.iunit.assign(g, 0);
    C.psi.assign(g * n * n, 0);
    C.muact.assign(g * g * n, 0);
    C.iota.assign(n, 0);
    C.braid.assign(n * n, 0);
    return C;
}

std::vector<int> GCrossedPointedCategory::objects_of_grade(int g) const {
    std::vector<int> out;
    for (int x = 0; x < n; ++x)
        if (grade[x] == g) out.push_back(x);
    return out;
}

bool GCrossedPointedCategory::operator==(const GCrossedPointedCategory& o) const {
    return G == o.G && K == o.K && n == o.n && grade == o.grade && unit == o.unit && tensor == o.tensor &&
           assoc == o.assoc && lunit == o.lunit && runit == o.runit && act == o.act && iunit == o.iunit &&
           psi == o.psi && muact == o.muact && iota == o.iota && braid == o.braid;
}

GCrossedPointedCategory make_trivial_gcrossed(const FiniteGroup& G, const FiniteAbelianGroup& K) {
    std::vector<int> grade(G.order);
    std::iota(grade.begin(), grade.end(), 0);
    auto C = GCrossedPointedCategory::blank(G, K, grade);
    C.unit = G.identity;
    for (int x = 0; x < C.n; ++x)
        for (int y = 0; y < C.n; ++y) C.T(x, y) = G.mul(x, y);
    for (int g = 0; g < G.order; ++g)
        for (int x = 0; x < C.n; ++x) C.F(g, x) = G.conj(g, x);
    return C;
}

// ---------------------------------------------------------------------------

namespace {

bool sizes_ok(const GCrossedPointedCategory& C, Report& r) {
    const std::size_t n = C.n, g = C.G.order;
    auto chk = [&](const std::vector<int>& v, std::size_t want, const char* name, int range) {
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
    bool ok = C.n >= 1;
    if (!ok) r.add("typing", {}, 0, "no objects");
    ok = ok && chk(C.grade, n, "grade", C.G.order);
    ok = ok && C.unit >= 0 && C.unit < C.n;
    ok = ok && chk(C.tensor, n * n, "tensor", C.n) && chk(C.act, g * n, "action", C.n);
    const int k = C.K.order;
    ok = ok && chk(C.assoc, n * n * n, "associator", k) && chk(C.lunit, n, "left unitor", k) &&
         chk(C.runit, n, "right unitor", k) && chk(C.iunit, g, "unit iso", k) &&
         chk(C.psi, g * n * n, "tensorator", k) && chk(C.muact, g * g * n, "composition", k) &&
         chk(C.iota, n, "identity action", k) && chk(C.braid, n * n, "braiding", k);
    return ok;
}

class ReportSink {
public:
    ReportSink(const FiniteAbelianGroup& K, Report& r) : K_(K), r_(r) {}
    void operator()(const char* ax, const std::vector<int>& w, int lhs, int rhs) const {
        if (lhs != rhs) r_.add(ax, w, K_.sub(rhs, lhs));
    }

private:
    const FiniteAbelianGroup& K_;
    Report& r_;
};

Report with_sink(const GCrossedPointedCategory& C, const VerifyOptions& opt,
                 void (*visit)(const GCrossedPointedCategory&, const AxiomSink&)) {
    Report r;
    r.exhaustive = opt.exhaustive;
    if (!sizes_ok(C, r)) return r;
    visit(C, ReportSink(C.K, r));
    return r;
}

}  // namespace

Report check_well_typed(const GCrossedPointedCategory& C, const VerifyOptions& opt) {
    Report r;
    r.exhaustive = opt.exhaustive;
    if (!sizes_ok(C, r)) return r;
    const auto& G = C.G;
    const int n = C.n;
    const int e = G.identity;
    if (C.gr(C.unit) != e) r.add("typing:unit", {C.unit}, 0, "unit is not in the identity component");
    for (int x = 0; x < n; ++x) {
        if (C.T(C.unit, x) != x || C.T(x, C.unit) != x) r.add("typing:unit", {x}, 0, "unit law fails on objects");
        for (int y = 0; y < n; ++y) {
            int xy = C.T(x, y);
            if (C.gr(xy) != G.mul(C.gr(x), C.gr(y))) r.add("typing:grading", {x, y});
            if (xy != C.T(C.F(C.gr(x), y), x))
                r.add("typing:crossed-commutation", {x, y}, 0, "x y differs from F_g(y) x");
            for (int z = 0; z < n; ++z)
                if (C.T(xy, z) != C.T(x, C.T(y, z))) r.add("typing:associativity", {x, y, z});
        }
    }
    for (int g = 0; g < G.order; ++g) {
        if (C.F(g, C.unit) != C.unit) r.add("typing:action-unit", {g});
        for (int x = 0; x < n; ++x) {
            if (C.gr(C.F(g, x)) != G.conj(g, C.gr(x))) r.add("typing:action-grading", {g, x});
            if (g == e && C.F(g, x) != x) r.add("typing:action-identity", {x});
            for (int h = 0; h < G.order; ++h)
                if (C.F(g, C.F(h, x)) != C.F(G.mul(g, h), x)) r.add("typing:action-composition", {g, h, x});
            for (int y = 0; y < n; ++y)
                if (C.F(g, C.T(x, y)) != C.T(C.F(g, x), C.F(g, y))) r.add("typing:action-tensor", {g, x, y});
        }
    }
    return r;
}

void visit_monoidal(const GCrossedPointedCategory& C, const AxiomSink& sink) {
    const auto& K = C.K;
    const int n = C.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = C.T(x, y);
            for (int z = 0; z < n; ++z) {
                const int yz = C.T(y, z);
                for (int w = 0; w < n; ++w) {
                    int lhs = K.add(C.a(xy, z, w), C.a(x, y, C.T(z, w)));
                    int rhs = KSum(K).add(C.a(x, y, z)).add(C.a(x, yz, w)).add(C.a(y, z, w)).value();
                    sink("pentagon", {x, y, z, w}, lhs, rhs);
                }
            }
            sink("triangle", {x, y}, K.add(C.a(x, C.unit, y), C.lunit[y]), C.runit[x]);
        }
}

void visit_action(const GCrossedPointedCategory& C, const AxiomSink& sink) {
    const auto& K = C.K;
    const auto& G = C.G;
    const int n = C.n;
    const int e = G.identity;
    for (int g = 0; g < G.order; ++g) {
        for (int x = 0; x < n; ++x) {
            const int Fx = C.F(g, x);
            for (int y = 0; y < n; ++y) {
                const int Fy = C.F(g, y), xy = C.T(x, y);
                for (int z = 0; z < n; ++z) {
                    const int Fz = C.F(g, z);
                    int lhs = KSum(K).add(C.a(Fx, Fy, Fz)).add(C.ps(g, y, z)).add(C.ps(g, x, C.T(y, z))).value();
                    int rhs = KSum(K).add(C.ps(g, x, y)).add(C.ps(g, xy, z)).add(C.a(x, y, z)).value();
                    sink("psi1", {g, x, y, z}, lhs, rhs);
                }
            }
            sink("psi2", {g, x, 0}, C.lunit[Fx], KSum(K).add(C.iunit[g]).add(C.ps(g, C.unit, x)).add(C.lunit[x]).value());
            sink("psi2", {g, x, 1}, C.runit[Fx], KSum(K).add(C.iunit[g]).add(C.ps(g, x, C.unit)).add(C.runit[x]).value());
        }
        for (int h = 0; h < G.order; ++h) {
            const int gh = G.mul(g, h);
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    int lhs = KSum(K)
                                  .add(C.ps(g, C.F(h, x), C.F(h, y)))
                                  .add(C.ps(h, x, y))
                                  .add(C.mu(g, h, C.T(x, y)))
                                  .value();
                    int rhs = KSum(K).add(C.mu(g, h, x)).add(C.mu(g, h, y)).add(C.ps(gh, x, y)).value();
                    sink("mu1", {g, h, x, y}, lhs, rhs);
                }
                for (int k = 0; k < G.order; ++k) {
                    int lhs = K.add(C.mu(h, k, x), C.mu(g, G.mul(h, k), x));
                    int rhs = K.add(C.mu(g, h, C.F(k, x)), C.mu(gh, k, x));
                    sink("mu2", {g, h, k, x}, lhs, rhs);
                }
            }
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            sink("iota1", {x, y}, C.iota[C.T(x, y)], KSum(K).add(C.iota[x]).add(C.iota[y]).add(C.ps(e, x, y)).value());
    for (int g = 0; g < G.order; ++g)
        for (int x = 0; x < n; ++x) {
            sink("iota2", {g, x, 0}, K.add(C.iota[C.F(g, x)], C.mu(e, g, x)), 0);
            sink("iota2", {g, x, 1}, K.add(C.iota[x], C.mu(g, e, x)), 0);
        }
}

void visit_braiding(const GCrossedPointedCategory& C, const AxiomSink& sink) {
    const auto& K = C.K;
    const auto& G = C.G;
    const int n = C.n;
    // (beta1): the braiding is compatible with the action
    for (int g = 0; g < G.order; ++g) {
        const int ginv = G.inv(g);
        for (int y = 0; y < n; ++y) {
            const int h = C.gr(y);
            const int ghg = G.mul(G.mul(g, h), ginv);
            for (int z = 0; z < n; ++z) {
                int lhs = KSum(K)
                              .sub(C.ps(g, y, z))
                              .add(C.c(C.F(g, y), C.F(g, z)))
                              .add(C.mu(ghg, g, z))
                              .value();
                int rhs = KSum(K).add(C.c(y, z)).sub(C.ps(g, C.F(h, z), y)).add(C.mu(g, h, z)).value();
                sink("beta1", {g, y, z}, lhs, rhs);
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        const int g = C.gr(x);
        for (int y = 0; y < n; ++y) {
            const int h = C.gr(y);
            const int Fy = C.F(g, y), xy = C.T(x, y);
            for (int z = 0; z < n; ++z) {
                const int Fz = C.F(g, z);
                // (beta2): x (y z)
                int lhs = KSum(K)
                              .add(C.a(x, y, z))
                              .add(C.c(x, C.T(y, z)))
                              .sub(C.ps(g, y, z))
                              .add(C.a(Fy, Fz, x))
                              .value();
                int rhs = KSum(K).add(C.c(x, y)).add(C.a(Fy, x, z)).add(C.c(x, z)).value();
                sink("beta2", {x, y, z}, lhs, rhs);
                // (beta3): (x y) z
                const int Fhz = C.F(h, z);
                lhs = KSum(K)
                          .sub(C.a(x, y, z))
                          .add(C.c(xy, z))
                          .sub(C.mu(g, h, z))
                          .sub(C.a(C.F(g, Fhz), x, y))
                          .value();
                rhs = KSum(K).add(C.c(y, z)).sub(C.a(x, Fhz, y)).add(C.c(x, Fhz)).value();
                sink("beta3", {x, y, z}, lhs, rhs);
            }
        }
    }
}

Report verify_monoidal(const GCrossedPointedCategory& C, const VerifyOptions& opt) {
    return with_sink(C, opt, visit_monoidal);
}
Report verify_action(const GCrossedPointedCategory& C, const VerifyOptions& opt) {
    return with_sink(C, opt, visit_action);
}
Report verify_braiding(const GCrossedPointedCategory& C, const VerifyOptions& opt) {
    return with_sink(C, opt, visit_braiding);
}

Report verify_all(const GCrossedPointedCategory& C, const VerifyOptions& opt) {
    Report r = check_well_typed(C, opt);
    if (!r.ok()) return r;
    Report parts[3];
    if (opt.jobs > 1) {
        auto f1 = std::async(std::launch::async, [&] { return verify_monoidal(C, opt); });
        auto f2 = std::async(std::launch::async, [&] { return verify_action(C, opt); });
        parts[2] = verify_braiding(C, opt);
        parts[0] = f1.get();
        parts[1] = f2.get();
    } else {
        parts[0] = verify_monoidal(C, opt);
        parts[1] = verify_action(C, opt);
        parts[2] = verify_braiding(C, opt);
    }
    for (const auto& p : parts) r.merge(p);
    return r;
}

bool is_strict(const GCrossedPointedCategory& C) {
    auto zero = [](const std::vector<int>& v) {
        for (int x : v)
            if (x) return false;
        return true;
    };
    return zero(C.assoc) && zero(C.lunit) && zero(C.runit) && zero(C.iunit) && zero(C.psi) && zero(C.muact) &&
           zero(C.iota);
}

long verification_work(const GCrossedPointedCategory& C) {
    long n = C.n, g = C.G.order;
    return std::max({n * n * n * n, g * n * n * n, g * g * n * n, g * g * g * n});
}

MonoidalOps monoidal_ops(const GCrossedPointedCategory& C) {
    MonoidalOps ops;
    ops.K = C.K;
    ops.unit = C.unit;
    auto c = std::make_shared<const GCrossedPointedCategory>(C);
    ops.tensor = [c](int x, int y) { return c->T(x, y); };
    ops.assoc = [c](int x, int y, int z) { return c->a(x, y, z); };
    ops.lunit = [c](int x) { return c->lunit[x]; };
    ops.runit = [c](int x) { return c->runit[x]; };
    ops.inverse_object = [c](int x) {
        for (int y = 0; y < c->n; ++y)
            if (c->T(x, y) == c->unit) return y;
        throw NoSolution("object " + std::to_string(x) + " is not invertible");
    };
    return ops;
}

// ---------------------------------------------------------------------------

GCrossedFunctor identity_functor(const GCrossedPointedCategory& C) {
    GCrossedFunctor F;
    F.source = C;
    F.target = C;
    F.obj.resize(C.n);
    std::iota(F.obj.begin(), F.obj.end(), 0);
    F.A2.assign(C.n * C.n, 0);
    F.ag.assign(C.G.order * C.n, 0);
    return F;
}

Report verify_functor(const GCrossedFunctor& F, const VerifyOptions& opt) {
    Report r;
    r.exhaustive = opt.exhaustive;
    const auto& S = F.source;
    const auto& D = F.target;
    if (!(S.G == D.G)) throw GradingMismatch("functor between categories over different groups");
    if (!(S.K == D.K)) throw GradingMismatch("functor between categories with different scalars");
    const int n = S.n;
    if (static_cast<int>(F.obj.size()) != n || static_cast<int>(F.A2.size()) != n * n ||
        static_cast<int>(F.ag.size()) != S.G.order * n) {
        r.add("typing", {}, 0, "functor tables have the wrong size");
        return r;
    }
    for (int x : F.obj)
        if (x < 0 || x >= D.n) {
            r.add("typing", {}, 0, "object map leaves the target");
            return r;
        }
    const auto& K = S.K;
    const auto& G = S.G;
    auto A = [&](int x) { return F.obj[x]; };
    auto A2 = [&](int x, int y) { return F.A2[x * n + y]; };
    auto ag = [&](int g, int x) { return F.ag[g * n + x]; };
    if (A(S.unit) != D.unit) r.add("typing:unit", {S.unit});
    for (int x = 0; x < n; ++x) {
        if (D.gr(A(x)) != S.gr(x)) r.add("typing:grading", {x});
        for (int y = 0; y < n; ++y)
            if (A(S.T(x, y)) != D.T(A(x), A(y))) r.add("typing:tensor", {x, y});
        for (int g = 0; g < G.order; ++g)
            if (A(S.F(g, x)) != D.F(g, A(x))) r.add("typing:action", {g, x});
    }
    if (!r.ok()) return r;
    auto chk = [&](const char* ax, std::vector<int> w, int lhs, int rhs) {
        if (lhs != rhs) r.add(ax, std::move(w), K.sub(rhs, lhs));
    };
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int xy = S.T(x, y);
            for (int z = 0; z < n; ++z) {
                int lhs = KSum(K).add(S.a(x, y, z)).add(A2(xy, z)).add(A2(x, y)).value();
                int rhs = KSum(K).add(A2(x, S.T(y, z))).add(A2(y, z)).add(D.a(A(x), A(y), A(z))).value();
                chk("functor-monoidal", {x, y, z}, lhs, rhs);
            }
        }
        chk("functor-unit", {x, 0}, KSum(K).add(S.lunit[x]).add(A2(S.unit, x)).add(F.A1).value(), D.lunit[A(x)]);
        chk("functor-unit", {x, 1}, KSum(K).add(S.runit[x]).add(A2(x, S.unit)).add(F.A1).value(), D.runit[A(x)]);
        chk("functor-iota", {x}, K.add(D.iota[A(x)], ag(G.identity, x)), S.iota[x]);
    }
    for (int g = 0; g < G.order; ++g) {
        chk("functor-action-unit", {g}, K.add(D.iunit[g], ag(g, S.unit)), S.iunit[g]);
        for (int x = 0; x < n; ++x) {
            const int Fx = S.F(g, x);
            for (int y = 0; y < n; ++y) {
                int lhs = KSum(K).add(D.ps(g, A(x), A(y))).add(A2(x, y)).add(ag(g, S.T(x, y))).value();
                int rhs = KSum(K).add(ag(g, x)).add(ag(g, y)).add(A2(Fx, S.F(g, y))).add(S.ps(g, x, y)).value();
                chk("functor-action-monoidal", {g, x, y}, lhs, rhs);
            }
            for (int h = 0; h < G.order; ++h) {
                int lhs = K.add(D.mu(g, h, A(x)), ag(G.mul(g, h), x));
                int rhs = KSum(K).add(ag(h, x)).add(ag(g, S.F(h, x))).add(S.mu(g, h, x)).value();
                chk("gamma1", {g, h, x}, lhs, rhs);
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        const int g = S.gr(a);
        for (int b = 0; b < n; ++b) {
            int lhs = K.add(A2(a, b), S.c(a, b));
            int rhs = KSum(K).add(D.c(A(a), A(b))).add(ag(g, b)).add(A2(S.F(g, b), a)).value();
            chk("gamma2", {a, b}, lhs, rhs);
        }
    }
    return r;
}

Report verify_transformation(const GCrossedTransformation& t, const VerifyOptions& opt) {
    Report r;
    r.exhaustive = opt.exhaustive;
    const auto& A = t.from;
    const auto& B = t.to;
    const auto& S = A.source;
    if (!(A.source == B.source) || !(A.target == B.target)) throw GradingMismatch("transformation between non-parallel functors");
    const int n = S.n;
    const auto& K = S.K;
    if (static_cast<int>(t.h.size()) != n) {
        r.add("typing", {}, 0, "component table has the wrong size");
        return r;
    }
    for (int x = 0; x < n; ++x)
        if (A.obj[x] != B.obj[x]) r.add("typing:component", {x}, 0, "functors disagree on objects");
    if (!r.ok()) return r;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int lhs = K.add(A.A2[x * n + y], t.h[S.T(x, y)]);
            int rhs = KSum(K).add(t.h[x]).add(t.h[y]).add(B.A2[x * n + y]).value();
            if (lhs != rhs) r.add("transformation-monoidal", {x, y}, K.sub(rhs, lhs));
        }
    if (K.add(A.A1, t.h[S.unit]) != B.A1) r.add("transformation-unit", {}, K.sub(B.A1, K.add(A.A1, t.h[S.unit])));
    for (int g = 0; g < S.G.order; ++g)
        for (int x = 0; x < n; ++x) {
            int lhs = K.add(A.ag[g * n + x], t.h[S.F(g, x)]);
            int rhs = K.add(t.h[x], B.ag[g * n + x]);
            if (lhs != rhs) r.add("transformation-action", {g, x}, K.sub(rhs, lhs));
        }
    return r;
}

GCrossedFunctor compose_functors(const GCrossedFunctor& F, const GCrossedFunctor& Gf) {
    if (!(F.target == Gf.source)) throw GradingMismatch("functors are not composable");
    GCrossedFunctor H;
    H.source = F.source;
    H.target = Gf.target;
    const int n = F.source.n, m = Gf.source.n;
    const auto& K = F.source.K;
    H.obj.resize(n);
    H.A2.resize(n * n);
    H.ag.resize(F.source.G.order * n);
    for (int x = 0; x < n; ++x) H.obj[x] = Gf.obj[F.obj[x]];
    H.A1 = K.add(F.A1, Gf.A1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) H.A2[x * n + y] = K.add(F.A2[x * n + y], Gf.A2[F.obj[x] * m + F.obj[y]]);
    for (int g = 0; g < F.source.G.order; ++g)
        for (int x = 0; x < n; ++x) H.ag[g * n + x] = K.add(F.ag[g * n + x], Gf.ag[g * m + F.obj[x]]);
    return H;
}

// ---------------------------------------------------------------------------

DualData right_dual(const GCrossedPointedCategory& C, int x) { return right_dual(monoidal_ops(C), x); }

DualData left_dual_from_right(const GCrossedPointedCategory& C, const DualData& d) {
    const auto& K = C.K;
    const auto& G = C.G;
    if (d.left || !check_snake(C, d)) throw NoSolution("left dual needs a valid right dual");
    const int x = d.x, xs = d.dual;
    const int g = C.gr(x), gi = G.inv(g);
    DualData l;
    l.left = true;
    l.x = x;
    l.dual = C.F(gi, xs);
    // x u -c-> F_g F_{g^-1}(x*) x -mu-> F_e(x*) x -iota^-1-> x* x -ev-> 1
    l.ev = KSum(K).add(C.c(x, l.dual)).add(C.mu(g, gi, xs)).sub(C.iota[xs]).add(d.ev).value();
    // 1 -i-> F_{g^-1}(1) -coev-> F_{g^-1}(x x*) -psi^-1-> F_{g^-1}(x) u -c^-1-> u x
    l.coev = KSum(K).add(C.iunit[gi]).add(d.coev).sub(C.ps(gi, x, xs)).sub(C.c(l.dual, x)).value();
    return l;
}

bool check_snake(const GCrossedPointedCategory& C, const DualData& d) { return check_snake(monoidal_ops(C), d); }

// ---------------------------------------------------------------------------

GCrossedMonoid decategorify(const GCrossedPointedCategory& C) {
    GCrossedMonoid M;
    M.G = C.G;
    M.n = C.n;
    M.grade = C.grade;
    M.mult = C.tensor;
    M.unit = C.unit;
    M.act = C.act;
    return M;
}

namespace {

// factor lists d1 | d2 | ... with product n, fewest factors first
void invariant_shapes(int n, int last, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 1) {
        out.push_back(cur);
        return;
    }
    for (int d = 2; d <= n; ++d) {
        if (n % d != 0 || (last > 1 && d % last != 0)) continue;
        cur.push_back(d);
        invariant_shapes(n / d, d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

ExtractedBraided extract_braided(const GCrossedPointedCategory& C, const std::vector<int>& factors) {
    if (C.G.order != 1) throw NotAGroupOfObjects("extract_braided needs a trivial grading group");
    const int n = C.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (C.T(x, y) != C.T(y, x)) throw NotAGroupOfObjects("tensor product of objects is not commutative");
            for (int z = 0; z < n; ++z)
                if (C.T(C.T(x, y), z) != C.T(x, C.T(y, z))) throw NotAGroupOfObjects("tensor of objects is not associative");
        }
    auto ops = monoidal_ops(C);
    for (int x = 0; x < n; ++x) ops.inverse_object(x);  // throws if some object is not invertible

    std::vector<std::vector<int>> shapes;
    if (!factors.empty()) {
        shapes.push_back(factors);
    } else {
        std::vector<int> cur;
        invariant_shapes(n, 1, cur, shapes);
        if (n == 1) shapes = {{}};
        std::stable_sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }
    auto power = [&](int x, int k) {
        int r = C.unit;
        for (int i = 0; i < k; ++i) r = C.T(r, x);
        return r;
    };
    for (const auto& shape : shapes) {
        FiniteAbelianGroup A(shape);
        if (A.order != n) continue;
        const int r = static_cast<int>(shape.size());
        std::vector<int> gens(r, 0);
        // lexicographic search over generator tuples
        while (true) {
            std::vector<int> img(n);
            std::vector<char> hit(n, 0);
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) {
                auto v = A.decode(a);
                int obj = C.unit;
                for (int i = 0; i < r; ++i) obj = C.T(obj, power(gens[i], v[i]));
                img[a] = obj;
                ok = !hit[obj];
                hit[obj] = 1;
            }
            if (ok)
                for (int i = 0; i < r && ok; ++i) ok = power(gens[i], shape[i]) == C.unit;
            if (ok) {
                ExtractedBraided out;
                out.cat = AbelianThreeCocycle(A, C.K);
                out.object_of = img;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        out.cat.br(a, b) = C.c(img[a], img[b]);
                        for (int c = 0; c < n; ++c) out.cat.al(a, b, c) = C.a(img[a], img[b], img[c]);
                    }
                return out;
            }
            int i = r - 1;
            while (i >= 0 && ++gens[i] == n) gens[i--] = 0;
            if (i < 0) break;
        }
    }
    throw NotAGroupOfObjects("objects do not form an abelian group of the requested shape");
}

}  // namespace gcb
