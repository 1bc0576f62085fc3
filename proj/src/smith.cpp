#include "gcb/smith.hpp"

#include <numeric>
#include <stdexcept>

namespace gcb {

long egcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long x1, y1;
    long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

namespace {

long md(long v, long m) { return ((v % m) + m) % m; }

// t with p*t = q (mod m), assuming gcd(p,m) | q.
long divide_mod(long p, long q, long m) {
    long g = std::gcd(p, m);
    long x, y;
    egcd(p / g, m / g, x, y);
    long mg = m / g;
    return md(md(q / g, mg) * md(x, mg), mg);
}

}  // namespace

SmithMod::SmithMod(const IntMatrix& C, int cols, long m) : C0_(C), rows_(static_cast<int>(C.size())), cols_(cols), m_(m) {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    M_.assign(rows_, std::vector<long>(cols_, 0));
    for (int i = 0; i < rows_; ++i) {
        if (static_cast<int>(C[i].size()) != cols_) throw std::invalid_argument("ragged matrix");
        for (int j = 0; j < cols_; ++j) M_[i][j] = md(C[i][j], m_);
    }
    V_.assign(cols_, std::vector<long>(cols_, 0));
    for (int j = 0; j < cols_; ++j) V_[j][j] = 1 % m_;
}

void SmithMod::diagonalise(std::vector<long>* rhs) {
    const long m = m_;
    auto& M = M_;
    auto& V = V_;
    const int lim = std::min(rows_, cols_);
    for (int t = 0; t < lim; ++t) {
        // pivot: entry with the smallest gcd against m
        long best = 0;
        int bi = -1, bj = -1;
        for (int i = t; i < rows_ && best != 1; ++i)
            for (int j = t; j < cols_; ++j)
                if (M[i][j]) {
                    long g = std::gcd(M[i][j], m);
                    if (bi < 0 || g < best) {
                        best = g;
                        bi = i;
                        bj = j;
                        if (g == 1) break;
                    }
                }
        if (bi < 0) break;
        std::swap(M[t], M[bi]);
        if (rhs) std::swap((*rhs)[t], (*rhs)[bi]);
        for (auto& r : M) std::swap(r[t], r[bj]);
        for (auto& r : V) std::swap(r[t], r[bj]);

        while (true) {
            bool changed = false;
            long p = M[t][t];
            for (int i = t + 1; i < rows_; ++i) {
                long q = M[i][t];
                if (q == 0) continue;
                if (q % std::gcd(p, m) == 0) {
                    long f = divide_mod(p, q, m);
                    for (int j = t; j < cols_; ++j) M[i][j] = md(M[i][j] - f * M[t][j], m);
                    if (rhs) (*rhs)[i] = md((*rhs)[i] - f * (*rhs)[t], m);
                } else {
                    long s, u;
                    long g = egcd(p, q, s, u);
                    long a = -q / g, b = p / g;
                    for (int j = t; j < cols_; ++j) {
                        long x = M[t][j], y = M[i][j];
                        M[t][j] = md(s * x + u * y, m);
                        M[i][j] = md(a * x + b * y, m);
                    }
                    if (rhs) {
                        long x = (*rhs)[t], y = (*rhs)[i];
                        (*rhs)[t] = md(s * x + u * y, m);
                        (*rhs)[i] = md(a * x + b * y, m);
                    }
                    p = M[t][t];
                    changed = true;
                }
            }
            for (int j = t + 1; j < cols_; ++j) {
                long q = M[t][j];
                if (q == 0) continue;
                if (q % std::gcd(p, m) == 0) {
                    long f = divide_mod(p, q, m);
                    for (auto& r : M) r[j] = md(r[j] - f * r[t], m);
                    for (auto& r : V) r[j] = md(r[j] - f * r[t], m);
                } else {
                    long s, u;
                    long g = egcd(p, q, s, u);
                    long a = -q / g, b = p / g;
                    auto op = [&](std::vector<long>& r) {
                        long x = r[t], y = r[j];
                        r[t] = md(s * x + u * y, m);
                        r[j] = md(a * x + b * y, m);
                    };
                    for (auto& r : M) op(r);
                    for (auto& r : V) op(r);
                    p = M[t][t];
                    changed = true;
                }
            }
            if (changed) continue;
            bool clean = true;
            for (int i = t + 1; i < rows_ && clean; ++i) clean = M[i][t] == 0;
            for (int j = t + 1; j < cols_ && clean; ++j) clean = M[t][j] == 0;
            if (clean) break;
        }
    }
}

std::vector<long> SmithMod::diagonal() const {
    SmithMod copy = *this;
    copy.diagonalise(nullptr);
    std::vector<long> d(cols_, 0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) d[i] = copy.M_[i][i];
    return d;
}

long SmithMod::kernel_size() const {
    long n = 1;
    for (long d : diagonal()) n *= std::gcd(d, m_);
    return n;
}

std::optional<std::vector<long>> SmithMod::solve(const std::vector<long>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("rhs size mismatch");
    SmithMod copy = *this;
    std::vector<long> rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = md(b[i], m_);
    copy.diagonalise(&rhs);
    std::vector<long> y(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        long d = i < cols_ ? copy.M_[i][i] : 0;
        if (d == 0) {
            if (rhs[i] != 0) return std::nullopt;
            continue;
        }
        if (rhs[i] % std::gcd(d, m_) != 0) return std::nullopt;
        y[i] = divide_mod(d, rhs[i], m_);
    }
    std::vector<long> x(cols_, 0);
    for (int i = 0; i < cols_; ++i) {
        long s = 0;
        for (int j = 0; j < cols_; ++j) s = md(s + copy.V_[i][j] * y[j], m_);
        x[i] = s;
    }
    // cheap insurance: the caller relies on exactness
    for (int i = 0; i < rows_; ++i) {
        long s = 0;
        for (int j = 0; j < cols_; ++j) s = md(s + C0_[i][j] * x[j], m_);
        if (s != md(b[i], m_)) throw std::logic_error("smith solve produced a wrong solution");
    }
    return x;
}

std::optional<std::vector<long>> solve_mod(const IntMatrix& C, int cols, const std::vector<long>& b, long m) {
    return SmithMod(C, cols, m).solve(b);
}

}  // namespace gcb
