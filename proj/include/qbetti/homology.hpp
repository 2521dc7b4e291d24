// Boundary matrices, combinatorial Laplacians, the Dirac operator, exact
// Betti numbers, and spectral diagnostics.
//
// Exact integer rank (fraction-free elimination) is the authority for Betti
// numbers and kernel dimensions; the floating-point eigensolve is a
// diagnostic layered on top. Zero eigenvalues are classified by the exact
// kernel dimension, never by an epsilon threshold.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qbetti/complex.hpp"
#include "qbetti/linalg.hpp"

namespace qbetti {

/// The boundary map taking k-chains to (k-1)-chains. Each column holds the
/// k facets of one k-simplex with alternating signs; the facet omitting the
/// i-th smallest vertex (1-based i) carries sign (-1)^(i-1). The map out of
/// the vertices is the zero map with zero rows.
struct BoundaryMatrix {
    int k = 0;     // source dimension
    IntMatrix m;   // |S_{k-1}| x |S_k|

    int rows() const { return m.rows(); }
    int cols() const { return m.cols(); }
};

/// The zero map out of the vertex set: 0 rows, |S_1| columns.
inline BoundaryMatrix vertex_boundary(const SimplexSet& vertices) {
    if (vertices.k != 1) throw std::invalid_argument("vertex_boundary: expected a 1-simplex set");
    return BoundaryMatrix{1, IntMatrix(0, static_cast<int>(vertices.size()))};
}

/// A boundary map with an empty source: |S_{k-1}| rows, 0 columns. Used for
/// the first dimension above the top of a complex.
inline BoundaryMatrix empty_boundary(int k, int rows) {
    return BoundaryMatrix{k, IntMatrix(rows, 0)};
}

inline BoundaryMatrix boundary_matrix(const SimplexSet& lower, const SimplexSet& upper) {
    if (lower.k != upper.k - 1)
        throw std::invalid_argument("boundary_matrix: lower.k must equal upper.k - 1");
    if (lower.n != upper.n)
        throw std::invalid_argument("boundary_matrix: simplex sets from different graphs");

    const int k = upper.k;
    IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    std::vector<int> facet(static_cast<std::size_t>(k) - 1);
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const std::vector<int>& verts = upper.members[col].vertices;
        std::int64_t sign = 1;
        for (int omit = 0; omit < k; ++omit) {
            facet.clear();
            for (int i = 0; i < k; ++i)
                if (i != omit) facet.push_back(verts[static_cast<std::size_t>(i)]);
            const std::ptrdiff_t row = lower.index_of(facet);
            if (row < 0) {
                // downward closure guarantees every facet is present
                throw std::logic_error("boundary_matrix: facet missing from lower simplex set");
            }
            m(static_cast<int>(row), static_cast<int>(col)) = sign;
            sign = -sign;
        }
    }
    return BoundaryMatrix{k, std::move(m)};
}

struct Laplacian {
    int k = 0;
    IntMatrix m;  // |S_k| x |S_k|, symmetric PSD

    int size() const { return m.rows(); }
};

/// Delta_k = d_k^T d_k + d_{k+1} d_{k+1}^T, exact integer arithmetic.
inline Laplacian laplacian(const BoundaryMatrix& d_k, const BoundaryMatrix& d_k1) {
    if (d_k1.k != d_k.k + 1)
        throw std::invalid_argument("laplacian: boundary maps not consecutive");
    if (d_k.cols() != d_k1.rows())
        throw std::invalid_argument("laplacian: shape mismatch between boundary maps");
    IntMatrix up = d_k1.m * d_k1.m.transposed();
    IntMatrix down = d_k.m.transposed() * d_k.m;
    return Laplacian{d_k.k, down + up};
}

/// beta_k = |S_k| - rank d_k - rank d_{k+1}, both ranks exact.
inline int betti_exact(const BoundaryMatrix& d_k, const BoundaryMatrix& d_k1) {
    if (d_k1.k != d_k.k + 1)
        throw std::invalid_argument("betti_exact: boundary maps not consecutive");
    if (d_k.cols() != d_k1.rows())
        throw std::invalid_argument("betti_exact: shape mismatch between boundary maps");
    return d_k.cols() - exact_rank(d_k.m) - exact_rank(d_k1.m);
}

/// The Hermitian block-tridiagonal assembly of all boundary maps. Real
/// symmetric, entries in {-1,0,+1}, at most n nonzeros per row; its square
/// is the direct sum of the Laplacians.
struct DiracOperator {
    IntMatrix m;
    std::vector<int> sector_offset;  // sector_offset[i] = global row of sector (i+1)'s first simplex
    std::vector<int> sector_size;    // sector_size[i] = |S_{i+1}|

    int dimension() const { return m.rows(); }
    int sector_count() const { return static_cast<int>(sector_size.size()); }

    /// Global row of the given simplex index within sector k.
    int global_index(int k, int i) const {
        return sector_offset[static_cast<std::size_t>(k) - 1] + i;
    }
};

/// Assemble B from the full chain of boundary maps in dimension order,
/// starting with the zero map out of the vertices. The first entry carries
/// |S_1| in its column count; entries beyond the top dimension may be empty.
inline DiracOperator dirac(const std::vector<BoundaryMatrix>& chain) {
    if (chain.empty()) throw std::invalid_argument("dirac: empty boundary chain");
    if (chain[0].k != 1 || chain[0].rows() != 0)
        throw std::invalid_argument("dirac: chain must start with the zero map out of the vertices");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].k != static_cast<int>(i) + 1)
            throw std::invalid_argument("dirac: chain not in dimension order");
        if (i > 0 && chain[i].rows() != chain[i - 1].cols())
            throw std::invalid_argument("dirac: inconsistent block shapes");
    }

    DiracOperator b;
    int total = 0;
    for (const BoundaryMatrix& d : chain) {
        b.sector_offset.push_back(total);
        b.sector_size.push_back(d.cols());
        total += d.cols();
    }
    b.m = IntMatrix(total, total);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const IntMatrix& d = chain[i].m;  // |S_{k-1}| x |S_k|, k = i+1
        const int ro = b.sector_offset[i - 1];
        const int co = b.sector_offset[i];
        for (int r = 0; r < d.rows(); ++r)
            for (int c = 0; c < d.cols(); ++c) {
                b.m(ro + r, co + c) = d(r, c);
                b.m(co + c, ro + r) = d(r, c);
            }
    }
    return b;
}

/// Spectral diagnostics of one Laplacian. kernel_dim comes from the exact
/// integer rank; eigenvalues are classified zero iff their sorted index is
/// below kernel_dim. lambda_min is the smallest eigenvalue classified
/// nonzero, absent when the matrix is all kernel.
struct SpectrumReport {
    int k = 0;
    std::vector<double> eigenvalues;  // ascending
    int kernel_dim = 0;
    std::optional<double> lambda_min;
    double lambda_max = 0.0;
    double gershgorin_bound = 0.0;
    Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues[i]

    int size() const { return static_cast<int>(eigenvalues.size()); }
};

inline SpectrumReport spectrum(const Laplacian& L) {
    const int n = L.size();
    if (n < 1) throw std::invalid_argument("spectrum: empty Laplacian");

    SpectrumReport rep;
    rep.k = L.k;
    rep.kernel_dim = n - exact_rank(L.m);

    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(L.m(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        std::ostringstream os;
        os << "spectrum: eigensolver failed to converge on\n";
        write_triplets(L.m, os);
        throw std::runtime_error(os.str());
    }

    rep.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    rep.eigenvectors = solver.eigenvectors();
    rep.lambda_max = rep.eigenvalues.back();
    if (rep.kernel_dim < n) rep.lambda_min = rep.eigenvalues[static_cast<std::size_t>(rep.kernel_dim)];

    double bound = 0.0;
    for (int i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) row_sum += std::abs(static_cast<double>(L.m(i, j)));
        bound = std::max(bound, row_sum);
    }
    rep.gershgorin_bound = bound;
    return rep;
}

/// All simplex sets and boundary maps of one graph, up to the top nonempty
/// dimension. sets[i] is S_{i+1}; chain[i] is the map out of dimension i+1,
/// with one trailing empty map above the top so every dimension has both
/// neighbors available.
struct ChainComplex {
    std::vector<SimplexSet> sets;
    std::vector<BoundaryMatrix> chain;

    int top_dimension() const { return static_cast<int>(sets.size()); }

    const BoundaryMatrix& lower_of(int k) const {  // map out of dimension k
        return chain[static_cast<std::size_t>(k) - 1];
    }
    const BoundaryMatrix& upper_of(int k) const {  // map into dimension k
        return chain[static_cast<std::size_t>(k)];
    }
};

inline ChainComplex build_chain(const EpsilonGraph& g) {
    ChainComplex cc;
    for (int k = 1; k <= g.n; ++k) {
        SimplexSet s = enumerate_simplices(g, k);
        if (s.size() == 0) break;
        cc.sets.push_back(std::move(s));
    }
    if (cc.sets.empty()) throw std::logic_error("build_chain: no vertices");
    cc.chain.push_back(vertex_boundary(cc.sets[0]));
    for (std::size_t i = 1; i < cc.sets.size(); ++i)
        cc.chain.push_back(boundary_matrix(cc.sets[i - 1], cc.sets[i]));
    cc.chain.push_back(empty_boundary(cc.top_dimension() + 1,
                                      static_cast<int>(cc.sets.back().size())));
    return cc;
}

}  // namespace qbetti
