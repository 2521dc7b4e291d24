// Combinatorial number system: bijection between weight-k vertex sets and
// natural numbers in [0, C(n,k)), so search runs over C(n,k) indices rather
// than 2^n strings.
#pragma once

#include <stdexcept>
#include <vector>

#include "qbetti/complex.hpp"
#include "qbetti/linalg.hpp"  // BigInt

namespace qbetti {

/// Exact Pascal-triangle lookup table, C(i,j) for 0 <= j <= i <= n_max.
/// Arbitrary precision: C(n,k) exceeds 64 bits for n around 68.
class PascalTable {
public:
    explicit PascalTable(int n_max) : n_max_(n_max) {
        if (n_max < 0) throw std::invalid_argument("PascalTable: n_max must be >= 0");
        rows_.resize(static_cast<std::size_t>(n_max) + 1);
        for (int i = 0; i <= n_max; ++i) {
            rows_[i].resize(static_cast<std::size_t>(i) + 1);
            rows_[i][0] = 1;
            rows_[i][i] = 1;
            for (int j = 1; j < i; ++j) rows_[i][j] = rows_[i - 1][j - 1] + rows_[i - 1][j];
        }
    }

    int n_max() const { return n_max_; }

    const BigInt& at(int i, int j) const {
        if (i < 0 || i > n_max_ || j < 0 || j > i)
            throw std::out_of_range("PascalTable::at: index out of range");
        return rows_[i][j];
    }

    /// C(a,b) with the zero-term convention C(a,b) = 0 for b < 0 or b > a.
    BigInt choose(int a, int b) const {
        if (b < 0 || b > a || a < 0) return 0;
        if (a > n_max_) throw std::invalid_argument("PascalTable::choose: table too small");
        return rows_[a][b];
    }

private:
    int n_max_;
    std::vector<std::vector<BigInt>> rows_;
};

inline PascalTable build_pascal(int n_max) { return PascalTable(n_max); }

/// Rank in [0, C(n,k)) together with its (n, k) context.
struct CombinadicRank {
    BigInt value;
    int n = 0;
    int k = 0;
};

/// rank = sum over the k one-positions x_1 < ... < x_k of C(x_i, i).
/// Strictly monotone with respect to colex order on sorted vertex sets.
inline CombinadicRank combinadic_rank(const Simplex& s, const PascalTable& table) {
    if (table.n_max() < s.n) throw std::invalid_argument("combinadic_rank: table too small");
    BigInt value = 0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        value += table.choose(s.vertices[i], static_cast<int>(i) + 1);
    return CombinadicRank{value, s.n, s.weight()};
}

/// Inverse of combinadic_rank: repeatedly take the largest x with
/// C(x, i) <= remainder (binary search over a table column), subtract, and
/// decrement i.
inline Simplex combinadic_unrank(const BigInt& value, int n, int k, const PascalTable& table) {
    if (k < 1 || k > n) throw std::invalid_argument("combinadic_unrank: k out of range [1, n]");
    if (table.n_max() < n) throw std::invalid_argument("combinadic_unrank: table too small");
    if (value < 0 || value >= table.choose(n, k))
        throw std::invalid_argument("combinadic_unrank: rank out of range [0, C(n,k))");

    std::vector<int> vertices(static_cast<std::size_t>(k));
    BigInt rem = value;
    int hi_limit = n - 1;
    for (int i = k; i >= 1; --i) {
        // largest x in [i-1, hi_limit] with C(x,i) <= rem; x = i-1 always
        // qualifies since C(i-1,i) = 0
        int lo = i - 1, hi = hi_limit;
        while (lo < hi) {
            const int mid = lo + (hi - lo + 1) / 2;
            if (table.choose(mid, i) <= rem)
                lo = mid;
            else
                hi = mid - 1;
        }
        vertices[static_cast<std::size_t>(i) - 1] = lo;
        rem -= table.choose(lo, i);
        hi_limit = lo - 1;
    }
    return Simplex(std::move(vertices), n);
}

}  // namespace qbetti
