#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gcb/fingroup.hpp"
#include "gcb/report.hpp"

namespace gcb {

struct CoefficientMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidAbelianCocycle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense map G^n -> K, indexed lexicographically (first argument most significant).
struct Cochain {
    FiniteGroup G;
    FiniteAbelianGroup K;
    int degree = 0;
    std::vector<int> values;

    Cochain() : values(1, 0) {}
    Cochain(FiniteGroup g, FiniteAbelianGroup k, int n);

    std::size_t size() const { return values.size(); }
    int index(const std::vector<int>& args) const;
    std::vector<int> args(std::size_t idx) const;
    int at(const std::vector<int>& args) const { return values[index(args)]; }
    int& at(const std::vector<int>& args) { return values[index(args)]; }

    template <class... I>
    int operator()(I... a) const {
        int idx = 0;
        ((idx = idx * G.order + a), ...);
        return values[idx];
    }

    bool is_normalized() const;
    bool operator==(const Cochain& o) const { return degree == o.degree && G == o.G && K == o.K && values == o.values; }
};

Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);
// b with db = c, found by Smith diagonalisation per cyclic factor of K.
std::optional<Cochain> is_coboundary(const Cochain& c);

// An abelian 3-cocycle on A with values in K; alpha is a 3-cochain on A
// (A viewed as a group), beta is indexed [a*|A| + b].
struct AbelianThreeCocycle {
    FiniteAbelianGroup A;
    FiniteAbelianGroup K;
    Cochain alpha;
    std::vector<int> beta;

    AbelianThreeCocycle() = default;
    AbelianThreeCocycle(FiniteAbelianGroup a, FiniteAbelianGroup k);

    int al(int a, int b, int c) const { return alpha.values[(a * A.order + b) * A.order + c]; }
    int br(int a, int b) const { return beta[a * A.order + b]; }
    int& al(int a, int b, int c) { return alpha.values[(a * A.order + b) * A.order + c]; }
    int& br(int a, int b) { return beta[a * A.order + b]; }

    bool operator==(const AbelianThreeCocycle& o) const {
        return A == o.A && K == o.K && alpha.values == o.alpha.values && beta == o.beta;
    }
};

AbelianThreeCocycle trivial_abelian_cocycle(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K);
// A = Z/2, K = Z/4, alpha(1,1,1) = 2, beta(1,1) = 1
AbelianThreeCocycle semion();
// alpha = 0 with the given beta table (a valid braiding iff beta is bilinear)
AbelianThreeCocycle bicharacter(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K, const std::vector<int>& beta);

// (alpha,beta)_* mu, the degree-4 cochain on G with values in K.
Cochain pw_pushforward(const Cochain& mu, const AbelianThreeCocycle& ac);
bool check_obstruction(const Cochain& omega, const Cochain& mu, const AbelianThreeCocycle& ac);
std::optional<Cochain> solve_obstruction(const Cochain& mu, const AbelianThreeCocycle& ac);

int quadratic_form(const AbelianThreeCocycle& ac, int b);

std::vector<std::vector<int>> enumerate_quadratic_forms(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K,
                                                        long bound = 1L << 20);
long enumerate_abelian_cocycle_classes(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K, long bound = 4096);

}  // namespace gcb
