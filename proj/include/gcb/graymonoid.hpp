#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcb/gcrossed.hpp"
#include "gcb/report.hpp"

namespace gcb {

struct NotStrict : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GrayAxiomFailure : std::runtime_error {
    Report report;
    GrayAxiomFailure(const std::string& what, Report r) : std::runtime_error(what), report(std::move(r)) {}
};
struct RoundTripMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pointed Gray-monoid with 0-cells G. A 1-cell is (source g, label x); the
// label carries a grade and the target is grade(x)*g, so Hom(g -> h) is the
// set of labels of grade h g^-1. Cell (g, x) has index g*labels + x.
// 2-cells only exist between equal 1-cells and are scalars in K, so the only
// weak datum is the interchanger phi.
struct PointedGrayMonoid {
    FiniteGroup G;
    FiniteAbelianGroup K;
    int labels = 1;
    std::vector<int> label_grade{0};
    std::vector<int> id_label{0};  // per 0-cell g
    std::vector<int> comp{0};      // (g*labels + y)*labels + x : label of y o x, x starting at g
    std::vector<int> L{0};         // k*cells + cell : id_k (x) cell
    std::vector<int> R{0};         // k*cells + cell : cell (x) id_k
    std::vector<int> phi{0};       // x*cells + y : (x (x) id)(id (x) y) => (id (x) y)(x (x) id)

    int cells() const { return G.order * labels; }
    int cell(int g, int x) const { return g * labels + x; }
    int src(int c) const { return c / labels; }
    int label(int c) const { return c % labels; }
    int tgt(int c) const { return G.mul(label_grade[label(c)], src(c)); }
    int id(int g) const { return cell(g, id_label[g]); }
    // vertical composite y o x (requires tgt(x) == src(y))
    int compose(int y, int x) const { return cell(src(x), comp[(src(x) * labels + label(y)) * labels + label(x)]); }
    int left(int k, int c) const { return L[k * cells() + c]; }
    int right(int k, int c) const { return R[k * cells() + c]; }
    int ph(int x, int y) const { return phi[x * cells() + y]; }

    bool operator==(const PointedGrayMonoid& o) const {
        return G == o.G && K == o.K && labels == o.labels && label_grade == o.label_grade && id_label == o.id_label &&
               comp == o.comp && L == o.L && R == o.R && phi == o.phi;
    }
};

Report verify_gray(const PointedGrayMonoid& M, const VerifyOptions& opt = {});

PointedGrayMonoid from_gcrossed(const GCrossedPointedCategory& C);            // throws NotStrict
PointedGrayMonoid from_gcrossed_unchecked(const GCrossedPointedCategory& C);
GCrossedPointedCategory to_gcrossed(const PointedGrayMonoid& M);              // throws GrayAxiomFailure
GCrossedPointedCategory to_gcrossed_unchecked(const PointedGrayMonoid& M);

// First differing table entry, e.g. "braid[3,1]: 2 vs 0", or nullopt if equal.
std::optional<std::string> first_difference(const GCrossedPointedCategory& a, const GCrossedPointedCategory& b);

struct RoundTrip {
    GCrossedPointedCategory recovered;
    GCrossedFunctor identity;
    Report functor_report;
};
// to_gcrossed(from_gcrossed(C)) must equal C entry by entry; throws
// RoundTripMismatch naming the first differing entry otherwise.
RoundTrip roundtrip_check(const GCrossedPointedCategory& C);

}  // namespace gcb
