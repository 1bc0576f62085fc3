#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcb/cochain.hpp"
#include "gcb/fingroup.hpp"
#include "gcb/pointed_cat.hpp"
#include "gcb/report.hpp"

namespace gcb {

struct ObstructionNonvanishing : std::runtime_error {
    Cochain obstruction;  // d(omega) - (alpha,beta)_* mu
    ObstructionNonvanishing(const std::string& what, Cochain o) : std::runtime_error(what), obstruction(std::move(o)) {}
};
struct NotACocycle : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GradingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAGroupOfObjects : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Skeletal pointed G-crossed braided category. Objects are 0..n-1, each with
// a grade in G. Every structure morphism is an automorphism, i.e. a scalar.
//
//   a(x,y,z)     (xy)z -> x(yz)
//   lunit(x)     1x -> x            runit(x)  x1 -> x
//   act[g][x]    F_g(x)
//   iunit[g]     1 -> F_g(1)
//   psi[g][x][y] F_g(x) F_g(y) -> F_g(xy)
//   muact[g][h][x]  F_g F_h (x) -> F_gh (x)
//   iota[x]      x -> F_e(x)
//   braid[x][y]  x y -> F_g(y) x      (x of grade g)
struct GCrossedPointedCategory {
    FiniteGroup G;
    FiniteAbelianGroup K;
    int n = 1;
    std::vector<int> grade{0};
    int unit = 0;
    std::vector<int> tensor{0};
    std::vector<int> assoc{0};
    std::vector<int> lunit{0};
    std::vector<int> runit{0};
    std::vector<int> act{0};
    std::vector<int> iunit{0};
    std::vector<int> psi{0};
    std::vector<int> muact{0};
    std::vector<int> iota{0};
    std::vector<int> braid{0};

    // all tables sized for n objects, zero scalars, unset (zero) object maps
    static GCrossedPointedCategory blank(FiniteGroup G, FiniteAbelianGroup K, std::vector<int> grade);

    int T(int x, int y) const { return tensor[x * n + y]; }
    int a(int x, int y, int z) const { return assoc[(x * n + y) * n + z]; }
    int F(int g, int x) const { return act[g * n + x]; }
    int ps(int g, int x, int y) const { return psi[(g * n + x) * n + y]; }
    int mu(int g, int h, int x) const { return muact[(g * G.order + h) * n + x]; }
    int c(int x, int y) const { return braid[x * n + y]; }
    int gr(int x) const { return grade[x]; }

    int& T(int x, int y) { return tensor[x * n + y]; }
    int& a(int x, int y, int z) { return assoc[(x * n + y) * n + z]; }
    int& F(int g, int x) { return act[g * n + x]; }
    int& ps(int g, int x, int y) { return psi[(g * n + x) * n + y]; }
    int& mu(int g, int h, int x) { return muact[(g * G.order + h) * n + x]; }
    int& c(int x, int y) { return braid[x * n + y]; }

    std::vector<int> objects_of_grade(int g) const;

    bool operator==(const GCrossedPointedCategory& o) const;
};

// Ob_g = {g}, tensor = group law, F = conjugation, every scalar 0.
GCrossedPointedCategory make_trivial_gcrossed(const FiniteGroup& G, const FiniteAbelianGroup& K);

struct VerifyOptions {
    bool exhaustive = false;  // keep all failures instead of the first 100
    int jobs = 1;
};

// Called once per axiom instance with both sides of the scalar equation.
using AxiomSink = std::function<void(const char* axiom, const std::vector<int>& witness, int lhs, int rhs)>;

Report check_well_typed(const GCrossedPointedCategory& C, const VerifyOptions& opt = {});
void visit_monoidal(const GCrossedPointedCategory& C, const AxiomSink& sink);
void visit_action(const GCrossedPointedCategory& C, const AxiomSink& sink);
void visit_braiding(const GCrossedPointedCategory& C, const AxiomSink& sink);

Report verify_monoidal(const GCrossedPointedCategory& C, const VerifyOptions& opt = {});
Report verify_action(const GCrossedPointedCategory& C, const VerifyOptions& opt = {});
Report verify_braiding(const GCrossedPointedCategory& C, const VerifyOptions& opt = {});
Report verify_all(const GCrossedPointedCategory& C, const VerifyOptions& opt = {});
bool is_strict(const GCrossedPointedCategory& C);
// largest number of tuples any single axiom class ranges over
long verification_work(const GCrossedPointedCategory& C);

MonoidalOps monoidal_ops(const GCrossedPointedCategory& C);

// ---- zesting --------------------------------------------------------------

// Object (g, a) of a zesting output has index g*|A| + a.
inline int zest_object(int g, int a, int A_order) { return g * A_order + a; }

GCrossedPointedCategory zest(const PointedBraidedCategory& B, const FiniteGroup& G, const Cochain& mu,
                             const Cochain& omega);
// Same tables but no precondition checks and no gauge solve; used to exhibit
// what goes wrong when the obstruction equation fails.
GCrossedPointedCategory zest_unchecked(const PointedBraidedCategory& B, const FiniteGroup& G, const Cochain& mu,
                                       const Cochain& omega);

// ---- functors ---------------------------------------------------------------

struct GCrossedFunctor {
    GCrossedPointedCategory source;
    GCrossedPointedCategory target;
    std::vector<int> obj;   // source object -> target object
    int A1 = 0;             // 1' -> A(1)
    std::vector<int> A2;    // A(x) A(y) -> A(xy), indexed x*n+y
    std::vector<int> ag;    // F'_g A(x) -> A(F_g x), indexed g*n+x

    bool operator==(const GCrossedFunctor&) const = default;
};

struct GCrossedTransformation {
    GCrossedFunctor from;
    GCrossedFunctor to;
    std::vector<int> h;  // from(x) -> to(x)
};

GCrossedFunctor identity_functor(const GCrossedPointedCategory& C);
Report verify_functor(const GCrossedFunctor& F, const VerifyOptions& opt = {});
Report verify_transformation(const GCrossedTransformation& t, const VerifyOptions& opt = {});
GCrossedFunctor compose_functors(const GCrossedFunctor& F, const GCrossedFunctor& Gf);  // Gf after F

// ---- duals ------------------------------------------------------------------

DualData right_dual(const GCrossedPointedCategory& C, int x);
DualData left_dual_from_right(const GCrossedPointedCategory& C, const DualData& d);
bool check_snake(const GCrossedPointedCategory& C, const DualData& d);

// ---- decategorification -----------------------------------------------------

struct GCrossedMonoid;
GCrossedMonoid decategorify(const GCrossedPointedCategory& C);

struct ExtractedBraided {
    PointedBraidedCategory cat;
    std::vector<int> object_of;  // element of A -> object index
};
// G must be trivial. `factors` fixes the shape of A; empty means the
// invariant-factor decomposition.
ExtractedBraided extract_braided(const GCrossedPointedCategory& C, const std::vector<int>& factors = {});

}  // namespace gcb
