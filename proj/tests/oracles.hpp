// Independent reference implementations used only by the tests. Where the
// library computes a value one way, these recompute it a structurally
// different way so agreement is meaningful.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qbetti/complex.hpp"
#include "qbetti/linalg.hpp"

namespace testutil {

using Rational = boost::multiprecision::cpp_rational;

/// Rank via plain Gaussian elimination over the rationals, no fraction-free
/// tricks. Reference for qbetti::exact_rank.
inline int rational_rank(const qbetti::IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m(i, j);

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[rank][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Exact binomial coefficient by the multiplicative formula with exact
/// stepwise division, independent of the Pascal-recurrence table.
inline qbetti::BigInt binomial_multiplicative(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    qbetti::BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

/// Phase-estimation outcome probability straight from the DFT amplitude sum,
/// no closed form. Reference for the Fejer-kernel evaluation.
inline double dft_outcome_probability(double phi, int t, std::uint64_t y) {
    const std::uint64_t big_n = std::uint64_t{1} << t;
    std::complex<double> acc(0.0, 0.0);
    const double delta = phi - static_cast<double>(y) / static_cast<double>(big_n);
    for (std::uint64_t j = 0; j < big_n; ++j)
        acc += std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) * delta);
    const double amp = std::abs(acc) / static_cast<double>(big_n);
    return amp * amp;
}

/// Number of undirected vertex pairs, the edge-mask width of a graph on n
/// vertices.
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph from an edge bitmask over pairs (i,j), i < j, in row-major pair
/// order. Encoded as a 0/1/2 distance matrix thresholded at epsilon = 1.
inline qbetti::EpsilonGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<double> d(static_cast<std::size_t>(n) * n, 2.0);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0.0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) {
                d[static_cast<std::size_t>(i) * n + j] = 1.0;
                d[static_cast<std::size_t>(j) * n + i] = 1.0;
            }
    return qbetti::build_graph(qbetti::DistanceMatrix(n, std::move(d)), 1.0);
}

/// Random graph with the given edge probability, seeded.
inline qbetti::EpsilonGraph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
    std::uint64_t mask = 0;
    const double scale = 1.0 / 9007199254740992.0;  // 2^-53
    for (int bit = 0; bit < pair_count(n); ++bit)
        if (static_cast<double>(rng() >> 11) * scale < edge_prob) mask |= std::uint64_t{1} << bit;
    return graph_from_mask(n, mask);
}

/// All weight-k subsets of {0..n-1} in colex order.
inline std::vector<std::vector<int>> all_subsets_colex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        // colex successor: bump the lowest element that can grow without
        // touching the ones above it, reset everything below
        int i = 0;
        while (i < k && (i + 1 < k ? cur[i] + 1 == cur[i + 1] : cur[i] + 1 == n)) ++i;
        if (i == k) break;
        ++cur[i];
        for (int j = 0; j < i; ++j) cur[j] = j;
    }
    return out;
}

/// Spearman rank correlation; ties get their first-occurrence rank (the
/// inputs in our use are distinct enough that this does not matter).
inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    auto ranks = [n](const std::vector<double>& v) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[order[i]] = static_cast<double>(i);
        return r;
    };
    const std::vector<double> rx = ranks(xs), ry = ranks(ys);
    const double mean = (static_cast<double>(n) - 1.0) / 2.0;
    double num = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (rx[i] - mean) * (ry[i] - mean);
        dx += (rx[i] - mean) * (rx[i] - mean);
        dy += (ry[i] - mean) * (ry[i] - mean);
    }
    return num / std::sqrt(dx * dy);
}

}  // namespace testutil
