// Vietoris-Rips machinery: distance matrix -> epsilon graph -> k-simplices.
//
// Convention used throughout: a k-simplex has k vertices (so 1-simplices are
// the vertices and 2-simplices the edges), vertex indices are 0-based, and
// simplex sets are kept in colexicographic order of their sorted vertex
// lists, which is the combinadic rank order.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbetti {

/// Symmetric nonnegative distance matrix with zero diagonal. Validates on
/// construction; an instance can only exist in a consistent state.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<double> entries) : n_(n), d_(std::move(entries)) {
        if (n_ < 1) throw std::invalid_argument("DistanceMatrix: need n >= 1");
        if (d_.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("DistanceMatrix: entry count != n*n");
        for (int i = 0; i < n_; ++i) {
            if (d_[idx(i, i)] != 0.0)
                throw std::invalid_argument("DistanceMatrix: nonzero diagonal");
            for (int j = 0; j < n_; ++j) {
                const double v = d_[idx(i, j)];
                if (!(v >= 0.0)) throw std::invalid_argument("DistanceMatrix: negative or NaN entry");
                if (v != d_[idx(j, i)]) throw std::invalid_argument("DistanceMatrix: not symmetric");
            }
        }
    }

    /// Euclidean distances of a point cloud (points of equal dimension).
    static DistanceMatrix from_points(const std::vector<std::vector<double>>& points) {
        const int n = static_cast<int>(points.size());
        if (n < 1) throw std::invalid_argument("from_points: empty point set");
        for (const auto& p : points)
            if (p.size() != points[0].size())
                throw std::invalid_argument("from_points: ragged point dimensions");
        std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double s = 0.0;
                for (std::size_t c = 0; c < points[i].size(); ++c) {
                    const double diff = points[i][c] - points[j][c];
                    s += diff * diff;
                }
                const double dist = std::sqrt(s);
                d[static_cast<std::size_t>(i) * n + j] = dist;
                d[static_cast<std::size_t>(j) * n + i] = dist;
            }
        return DistanceMatrix(n, std::move(d));
    }

    int size() const { return n_; }
    double operator()(int i, int j) const { return d_[idx(i, j)]; }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("DistanceMatrix: index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<double> d_;
};

/// Undirected neighborhood graph at scale epsilon: i ~ j iff d(i,j) <= epsilon.
struct EpsilonGraph {
    int n = 0;
    double epsilon = 0.0;
    std::vector<std::uint8_t> adjacency;  // n*n, symmetric, zero diagonal

    bool adjacent(int i, int j) const {
        return adjacency[static_cast<std::size_t>(i) * n + j] != 0;
    }

    int edge_count() const {
        int c = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) c += adjacent(i, j);
        return c;
    }
};

/// A simplex as a strictly increasing 0-based vertex list, with the ambient
/// vertex count n carried along so it can render itself as an n-bit string.
struct Simplex {
    std::vector<int> vertices;
    int n = 0;

    Simplex() = default;
    Simplex(std::vector<int> verts, int ambient_n) : vertices(std::move(verts)), n(ambient_n) {
        if (vertices.empty()) throw std::invalid_argument("Simplex: weight 0 is rejected");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] < 0 || vertices[i] >= n)
                throw std::invalid_argument("Simplex: vertex out of range");
            if (i > 0 && vertices[i] <= vertices[i - 1])
                throw std::invalid_argument("Simplex: vertices must be strictly increasing");
        }
    }

    int weight() const { return static_cast<int>(vertices.size()); }

    /// n-character string, '1' at the vertex positions; index 0 is leftmost.
    std::string bits() const {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int v : vertices) s[static_cast<std::size_t>(v)] = '1';
        return s;
    }
};

/// Colex order on equally sized sorted vertex lists: compare largest
/// elements first. This is exactly the order induced by combinadic rank.
inline bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/// All k-simplices of one graph, colex-sorted.
struct SimplexSet {
    int n = 0;
    int k = 0;
    std::vector<Simplex> members;

    std::size_t size() const { return members.size(); }

    /// Position of a vertex list in the colex-sorted members, -1 if absent.
    std::ptrdiff_t index_of(const std::vector<int>& verts) const {
        auto it = std::lower_bound(
            members.begin(), members.end(), verts,
            [](const Simplex& s, const std::vector<int>& v) { return colex_less(s.vertices, v); });
        if (it == members.end() || it->vertices != verts) return -1;
        return it - members.begin();
    }
};

/// i ~ j iff i != j and d(i,j) <= epsilon. The threshold is closed, so ties
/// at exactly epsilon are edges.
inline EpsilonGraph build_graph(const DistanceMatrix& d, double epsilon) {
    if (!(epsilon >= 0.0)) throw std::invalid_argument("build_graph: epsilon must be >= 0");
    EpsilonGraph g;
    g.n = d.size();
    g.epsilon = epsilon;
    g.adjacency.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            g.adjacency[static_cast<std::size_t>(i) * g.n + j] = (i != j && d(i, j) <= epsilon);
    return g;
}

/// True iff every vertex pair of s is adjacent in g. Single vertices are
/// always simplices.
inline bool is_simplex(const EpsilonGraph& g, const Simplex& s) {
    if (s.weight() < 1) throw std::invalid_argument("is_simplex: weight must be >= 1");
    if (s.vertices.back() >= g.n) throw std::invalid_argument("is_simplex: vertex out of range");
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
            if (!g.adjacent(s.vertices[i], s.vertices[j])) return false;
    return true;
}

namespace detail {

inline void extend_clique(const EpsilonGraph& g, std::vector<int>& current,
                          const std::vector<int>& candidates, int k,
                          std::vector<Simplex>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.emplace_back(current, g.n);
        return;
    }
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        const int v = candidates[idx];
        // prune: not enough larger candidates left to finish the clique
        if (static_cast<int>(current.size()) + static_cast<int>(candidates.size() - idx) < k) break;
        std::vector<int> next;
        next.reserve(candidates.size() - idx);
        for (std::size_t l = idx + 1; l < candidates.size(); ++l)
            if (g.adjacent(v, candidates[l])) next.push_back(candidates[l]);
        current.push_back(v);
        extend_clique(g, current, next, k, out);
        current.pop_back();
    }
}

}  // namespace detail

/// The k-cliques of g as a colex-sorted SimplexSet. k = 1 returns all n
/// vertices; k = 0 is rejected.
inline SimplexSet enumerate_simplices(const EpsilonGraph& g, int k) {
    if (k < 1 || k > g.n) throw std::invalid_argument("enumerate_simplices: k out of range [1, n]");
    SimplexSet out;
    out.n = g.n;
    out.k = k;
    std::vector<int> all(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) all[static_cast<std::size_t>(v)] = v;
    std::vector<int> current;
    detail::extend_clique(g, current, all, k, out.members);
    std::sort(out.members.begin(), out.members.end(),
              [](const Simplex& a, const Simplex& b) { return colex_less(a.vertices, b.vertices); });
    return out;
}

}  // namespace qbetti
