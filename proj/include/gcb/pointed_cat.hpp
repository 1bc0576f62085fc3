#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcb/cochain.hpp"
#include "gcb/report.hpp"

namespace gcb {

// A skeletal braided pointed category is exactly an abelian 3-cocycle read
// as tables: objects A, hom(x,x) = K, associator alpha, braiding beta.
using PointedBraidedCategory = AbelianThreeCocycle;

struct LeafMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enough of a skeletal monoidal category to evaluate reassociations and
// snakes. Objects are integer ids; every scalar lives in K.
struct MonoidalOps {
    FiniteAbelianGroup K;
    int unit = 0;
    std::function<int(int, int)> tensor;
    std::function<int(int, int, int)> assoc;  // (xy)z -> x(yz)
    std::function<int(int)> lunit;            // 1x -> x
    std::function<int(int)> runit;            // x1 -> x
    std::function<int(int)> inverse_object;   // the y with x y = y x = 1
};

MonoidalOps monoidal_ops(const PointedBraidedCategory& cat);

// Parenthesised tensor word. Immutable; subtrees are shared.
class Word {
public:
    static Word leaf(int x);
    static Word join(const Word& l, const Word& r);
    static Word left_nested(const std::vector<int>& leaves);
    static Word right_nested(const std::vector<int>& leaves);

    bool is_leaf() const { return !l_; }
    int value() const { return v_; }
    const Word& left() const { return *l_; }
    const Word& right() const { return *r_; }
    std::vector<int> leaves() const;
    std::size_t size() const;
    std::string str() const;
    bool operator==(const Word& o) const { return str() == o.str(); }

private:
    int v_ = -1;
    std::shared_ptr<const Word> l_, r_;
};

int word_object(const MonoidalOps& ops, const Word& w);
// scalar of the canonical morphism w -> left-nested normal form
int to_left_normal(const MonoidalOps& ops, const Word& w);
// scalar of w -> target through the left-nested normal form
int reassociate(const MonoidalOps& ops, const Word& w, const Word& target);

struct Move {
    Word result;
    int scalar;
};
// every single alpha or alpha^{-1} application at any subterm
std::vector<Move> elementary_moves(const MonoidalOps& ops, const Word& w);
std::vector<Word> all_parenthesizations(const std::vector<int>& leaves);
// Explores the whole move graph from w. Returns the common scalar of every
// path w -> target, or nullopt if two paths disagree somewhere.
std::optional<int> path_independent_scalar(const MonoidalOps& ops, const Word& w, const Word& target);
// scalar of a uniformly random move sequence from w to target
int random_path_scalar(const MonoidalOps& ops, const Word& w, const Word& target, unsigned seed);

Report check_pentagon(const PointedBraidedCategory& cat);
Report check_hexagons(const PointedBraidedCategory& cat);
bool is_bilinear(const FiniteAbelianGroup& A, const FiniteAbelianGroup& K, const std::vector<int>& beta);

struct DualData {
    int x = 0;
    int dual = 0;
    int ev = 0;    // right: dual x -> 1 ; left: x dual -> 1
    int coev = 0;  // right: 1 -> x dual ; left: 1 -> dual x
    bool left = false;
};

DualData right_dual(const MonoidalOps& ops, int x);
DualData right_dual(const PointedBraidedCategory& cat, int x);
// both zig-zag defects (0 means the snake is the identity)
std::pair<int, int> snake_defects(const MonoidalOps& ops, const DualData& d);
bool check_snake(const MonoidalOps& ops, const DualData& d);

}  // namespace gcb
