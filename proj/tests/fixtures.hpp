#pragma once

#include <string>
#include <vector>

#include "gcb/cochain.hpp"
#include "gcb/fingroup.hpp"
#include "gcb/gcrossed.hpp"
#include "gcb/io.hpp"

namespace fx {

inline std::string corpus(const std::string& name) { return std::string(GCB_SOURCE_DIR) + "/corpus/" + name; }

inline gcb::GCrossedPointedCategory load_gcrossed(const std::string& name) {
    return std::get<gcb::GCrossedPointedCategory>(gcb::load(corpus(name)).body);
}

inline gcb::Cochain cochain(const gcb::FiniteGroup& G, const gcb::FiniteAbelianGroup& K, int degree,
                            std::initializer_list<std::pair<std::vector<int>, int>> entries) {
    gcb::Cochain c(G, K, degree);
    for (const auto& [args, v] : entries) c.at(args) = v;
    return c;
}

// Hand-rolled reference coboundary for cyclic G = Z/n with cyclic K = Z/m,
// working directly on residues rather than through the library encodings.
inline std::vector<int> ref_coboundary(int n, int m, int degree, const std::vector<int>& c) {
    auto idx = [&](const std::vector<int>& t) {
        int i = 0;
        for (int x : t) i = i * n + x;
        return i;
    };
    int size = 1;
    for (int i = 0; i <= degree; ++i) size *= n;
    std::vector<int> out(size);
    for (int r = 0; r < size; ++r) {
        std::vector<int> t(degree + 1);
        int rest = r;
        for (int i = degree; i >= 0; --i) {
            t[i] = rest % n;
            rest /= n;
        }
        long s = c[idx(std::vector<int>(t.begin() + 1, t.end()))];
        for (int i = 0; i < degree; ++i) {
            std::vector<int> u;
            for (int j = 0; j <= degree; ++j) {
                if (j == i) {
                    u.push_back((t[i] + t[i + 1]) % n);
                    ++j;
                } else {
                    u.push_back(t[j]);
                }
            }
            s += (i % 2 == 0 ? -1 : 1) * c[idx(u)];
        }
        s += ((degree + 1) % 2 == 0 ? 1 : -1) * c[idx(std::vector<int>(t.begin(), t.end() - 1))];
        out[r] = static_cast<int>(((s % m) + m) % m);
    }
    return out;
}

}  // namespace fx
