#pragma once

#include <vector>

#include "gcb/fingroup.hpp"
#include "gcb/report.hpp"

namespace gcb {

// Carrier 0..n-1 with a grading, a graded multiplication and a G-action
// pi_g : M_h -> M_{g h g^-1}.
struct GCrossedMonoid {
    FiniteGroup G;
    int n = 1;
    std::vector<int> grade{0};
    std::vector<int> mult{0};  // x*n + y
    int unit = 0;
    std::vector<int> act{0};  // g*n + x

    int m(int x, int y) const { return mult[x * n + y]; }
    int pi(int g, int x) const { return act[g * n + x]; }

    bool operator==(const GCrossedMonoid& o) const {
        return G == o.G && n == o.n && grade == o.grade && mult == o.mult && unit == o.unit && act == o.act;
    }
};

// M_g = {g}, multiplication = group law, pi = conjugation
GCrossedMonoid group_as_crossed_monoid(const FiniteGroup& G);

Report verify(const GCrossedMonoid& M);
bool is_commutative(const GCrossedMonoid& M, int g);

}  // namespace gcb
