#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gcb/report.hpp"

namespace gcb {

struct InvalidHom : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Elements are 0..order-1, identity is always 0.
struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> table{{0}};
    int identity = 0;
    std::vector<int> inverse{0};
    std::string name;

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int g, int h) const { return table[table[g][h]][inverse[g]]; }
    bool is_abelian() const;

    // Validates the table (throws std::invalid_argument with the report text).
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = {});

    bool operator==(const FiniteGroup& o) const { return table == o.table; }
};

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);  // element k + n*s is r^k s^s
FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b);  // (x,y) -> x*|b| + y
FiniteGroup make_trivial();

Report check_group_axioms(const std::vector<std::vector<int>>& table);

int conjugate(const FiniteGroup& G, int g, int h);
std::vector<int> center(const FiniteGroup& G);

// Additive finite abelian group Z/n1 x ... x Z/nr. Elements are encoded in
// mixed radix with the first factor least significant.
struct FiniteAbelianGroup {
    std::vector<int> factors;
    int order = 1;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<int> f);

    std::vector<int> decode(int a) const;
    int encode(const std::vector<int>& v) const;
    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int scale(long k, int a) const;
    int component(int a, int i) const;
    int unit_in(int i) const;  // generator of the i-th factor
    int additive_order(int a) const;

    FiniteGroup as_group() const;
    std::string str() const;

    bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }
};

// Accumulates a signed sum in K without re-encoding on every step.
class KSum {
public:
    explicit KSum(const FiniteAbelianGroup& K) : K_(K), v_(K.factors.size(), 0) {}
    KSum& add(int a, long s = 1);
    KSum& sub(int a) { return add(a, -1); }
    int value() const;

private:
    const FiniteAbelianGroup& K_;
    std::vector<long> v_;
};

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> image;

    Report check() const;
};

struct KernelResult {
    std::vector<int> elements;
    bool normal = false;
};

KernelResult kernel_normal(const GroupHom& hom);

// "Z2", "Z2xZ3", "D3", "1" -> group
FiniteGroup parse_group_spec(const std::string& spec);
// "Z2", "Z2xZ4", "1" -> factor list
FiniteAbelianGroup parse_abelian_spec(const std::string& spec);

}  // namespace gcb
