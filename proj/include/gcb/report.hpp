#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gcb {

// One violated instance of an axiom. `defect` is rhs - lhs as an element
// index of the scalar group (0 when the failure is structural, e.g. typing).
struct Failure {
    std::string axiom;
    std::vector<int> witness;
    int defect = 0;
    std::string note;
};

struct Report {
    std::vector<Failure> failures;
    std::size_t total = 0;      // all failures seen, including those not kept
    bool exhaustive = false;    // keep everything instead of the first `limit`
    std::size_t limit = 100;

    bool ok() const { return total == 0; }

    void add(std::string axiom, std::vector<int> witness, int defect = 0, std::string note = {}) {
        ++total;
        if (exhaustive || failures.size() < limit)
            failures.push_back({std::move(axiom), std::move(witness), defect, std::move(note)});
    }

    void merge(const Report& other) {
        for (const auto& f : other.failures) {
            if (exhaustive || failures.size() < limit) failures.push_back(f);
        }
        total += other.total;
    }

    bool has(const std::string& axiom) const {
        for (const auto& f : failures)
            if (f.axiom == axiom) return true;
        return false;
    }

    std::string str() const;
};

}  // namespace gcb
