#pragma once

#include <optional>
#include <vector>

namespace gcb {

using IntMatrix = std::vector<std::vector<long>>;

// Two-sided Smith diagonalisation of C over Z/m: U C V = D with D diagonal.
// Row operations are mirrored on an optional right-hand side; column
// operations are accumulated in V so solutions can be mapped back.
struct SmithMod {
    SmithMod(const IntMatrix& C, int cols, long m);

    std::vector<long> diagonal() const;  // length cols; 0 for zero/missing pivots
    long kernel_size() const;            // #{x in (Z/m)^cols : Cx = 0}
    std::optional<std::vector<long>> solve(const std::vector<long>& b) const;

private:
    void diagonalise(std::vector<long>* rhs);

    IntMatrix C0_;
    IntMatrix M_;
    IntMatrix V_;
    int rows_;
    int cols_;
    long m_;
};

long egcd(long a, long b, long& x, long& y);

// Any x with Cx = b (mod m), or nullopt.
std::optional<std::vector<long>> solve_mod(const IntMatrix& C, int cols, const std::vector<long>& b, long m);

}  // namespace gcb
