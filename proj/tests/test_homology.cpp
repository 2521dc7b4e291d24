#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qbetti/homology.hpp"
#include "oracles.hpp"

using qbetti::BoundaryMatrix;
using qbetti::ChainComplex;
using qbetti::EpsilonGraph;
using qbetti::IntMatrix;
using qbetti::SimplexSet;

namespace {

EpsilonGraph four_cycle() {
    return qbetti::build_graph(
        qbetti::DistanceMatrix::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 1.0);
}

EpsilonGraph complete(int n) {
    std::vector<double> d(static_cast<std::size_t>(n) * n, 1.0);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0.0;
    return qbetti::build_graph(qbetti::DistanceMatrix(n, std::move(d)), 1.0);
}

EpsilonGraph single_edge() { return complete(2); }

}  // namespace

TEST_CASE("vertex boundary is the zero map with zero rows") {
    SimplexSet s1 = qbetti::enumerate_simplices(four_cycle(), 1);
    BoundaryMatrix d1 = qbetti::vertex_boundary(s1);
    REQUIRE(d1.k == 1);
    REQUIRE(d1.m.rows() == 0);
    REQUIRE(d1.m.cols() == 4);
}

TEST_CASE("edge boundary signs") {
    EpsilonGraph g = single_edge();
    SimplexSet s1 = qbetti::enumerate_simplices(g, 1);
    SimplexSet s2 = qbetti::enumerate_simplices(g, 2);
    BoundaryMatrix d2 = qbetti::boundary_matrix(s1, s2);
    REQUIRE(d2.m.rows() == 2);
    REQUIRE(d2.m.cols() == 1);
    // edge {a,b}: -1 at the facet dropping b (i.e. [a]), +1 at [b]
    REQUIRE(d2.m(0, 0) == -1);
    REQUIRE(d2.m(1, 0) == 1);
}

TEST_CASE("triangle boundary signs alternate") {
    EpsilonGraph g = complete(3);
    SimplexSet s2 = qbetti::enumerate_simplices(g, 2);
    SimplexSet s3 = qbetti::enumerate_simplices(g, 3);
    BoundaryMatrix d3 = qbetti::boundary_matrix(s2, s3);
    REQUIRE(d3.m.rows() == 3);
    REQUIRE(d3.m.cols() == 1);
    // facets of {0,1,2}: drop 0 -> {1,2} sign +, drop 1 -> {0,2} sign -,
    // drop 2 -> {0,1} sign +
    REQUIRE(d3.m(static_cast<int>(s2.index_of({1, 2})), 0) == 1);
    REQUIRE(d3.m(static_cast<int>(s2.index_of({0, 2})), 0) == -1);
    REQUIRE(d3.m(static_cast<int>(s2.index_of({0, 1})), 0) == 1);

    // every column has exactly k nonzeros, all in {-1,+1}
    for (int j = 0; j < d3.m.cols(); ++j) {
        int nz = 0;
        for (int i = 0; i < d3.m.rows(); ++i) {
            REQUIRE(std::abs(d3.m(i, j)) <= 1);
            nz += d3.m(i, j) != 0;
        }
        REQUIRE(nz == 3);
    }

    REQUIRE_THROWS_AS(qbetti::boundary_matrix(s3, s2), std::invalid_argument);
    REQUIRE_THROWS_AS(qbetti::boundary_matrix(s2, s2), std::invalid_argument);
}

TEST_CASE("laplacian of fixed complexes") {
    EpsilonGraph edge = single_edge();
    ChainComplex cc = qbetti::build_chain(edge);
    qbetti::Laplacian l1 = qbetti::laplacian(cc.lower_of(1), cc.upper_of(1));
    REQUIRE(l1.m.rows() == 2);
    REQUIRE(l1.m(0, 0) == 1);
    REQUIRE(l1.m(0, 1) == -1);
    REQUIRE(l1.m(1, 0) == -1);
    REQUIRE(l1.m(1, 1) == 1);

    // top dimension: the upper term vanishes
    qbetti::Laplacian l2 = qbetti::laplacian(cc.lower_of(2), cc.upper_of(2));
    REQUIRE(l2.m.rows() == 1);
    REQUIRE(l2.m(0, 0) == 2);

    ChainComplex k3 = qbetti::build_chain(complete(3));
    qbetti::Laplacian l = qbetti::laplacian(k3.lower_of(2), k3.upper_of(2));
    REQUIRE(l.m.rows() == 3);
    for (int i = 0; i < 3; ++i) REQUIRE(l.m(i, i) == 3);

    // symmetry
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) REQUIRE(l.m(i, j) == l.m(j, i));

    REQUIRE_THROWS_AS(qbetti::laplacian(cc.lower_of(1), k3.upper_of(2)), std::invalid_argument);
}

TEST_CASE("chain law: consecutive boundaries compose to zero") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        EpsilonGraph g = testutil::random_graph(n, 0.6, rng);
        ChainComplex cc = qbetti::build_chain(g);
        for (int k = 1; k <= cc.top_dimension(); ++k)
            REQUIRE((cc.lower_of(k).m * cc.upper_of(k).m).is_zero());
    }
}

TEST_CASE("betti numbers of fixed complexes") {
    ChainComplex vertex = qbetti::build_chain(testutil::graph_from_mask(1, 0));
    REQUIRE(qbetti::betti_exact(vertex.lower_of(1), vertex.upper_of(1)) == 1);

    ChainComplex cycle = qbetti::build_chain(four_cycle());
    REQUIRE(qbetti::betti_exact(cycle.lower_of(1), cycle.upper_of(1)) == 1);  // one component
    REQUIRE(qbetti::betti_exact(cycle.lower_of(2), cycle.upper_of(2)) == 1);  // one hole

    ChainComplex k3 = qbetti::build_chain(complete(3));
    REQUIRE(qbetti::betti_exact(k3.lower_of(2), k3.upper_of(2)) == 0);  // filled

    // two disjoint edges: two components, no cycles
    EpsilonGraph two_edges = testutil::graph_from_mask(4, 0b100001);  // pairs {0,1} and {2,3}
    REQUIRE(two_edges.edge_count() == 2);
    ChainComplex te = qbetti::build_chain(two_edges);
    REQUIRE(qbetti::betti_exact(te.lower_of(1), te.upper_of(1)) == 2);
}

TEST_CASE("betti agrees with rational-elimination ranks") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        EpsilonGraph g = testutil::random_graph(n, 0.55, rng);
        ChainComplex cc = qbetti::build_chain(g);
        for (int k = 1; k <= cc.top_dimension(); ++k) {
            const int s = static_cast<int>(cc.sets[static_cast<std::size_t>(k) - 1].size());
            const int oracle = s - testutil::rational_rank(cc.lower_of(k).m) -
                               testutil::rational_rank(cc.upper_of(k).m);
            REQUIRE(qbetti::betti_exact(cc.lower_of(k), cc.upper_of(k)) == oracle);
            const qbetti::Laplacian lap = qbetti::laplacian(cc.lower_of(k), cc.upper_of(k));
            REQUIRE(s - testutil::rational_rank(lap.m) == oracle);
        }
    }
}

TEST_CASE("dirac operator assembly") {
    // complex with only vertices: B = 0
    EpsilonGraph bare = testutil::graph_from_mask(3, 0);
    ChainComplex cb = qbetti::build_chain(bare);
    qbetti::DiracOperator b0 = qbetti::dirac(cb.chain);
    REQUIRE(b0.dimension() == 3);
    REQUIRE(b0.m.is_zero());

    // single edge: 3x3, squares to diag(laplacian_1, laplacian_2)
    ChainComplex ce = qbetti::build_chain(single_edge());
    qbetti::DiracOperator b = qbetti::dirac(ce.chain);
    REQUIRE(b.dimension() == 3);
    REQUIRE(b.m == b.m.transposed());
    IntMatrix b2 = b.m * b.m;
    IntMatrix expect(3, 3);
    expect(0, 0) = 1; expect(0, 1) = -1; expect(1, 0) = -1; expect(1, 1) = 1;
    expect(2, 2) = 2;
    REQUIRE(b2 == expect);
}

TEST_CASE("dirac square is the direct sum of laplacians") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        EpsilonGraph g = testutil::random_graph(n, 0.65, rng);
        ChainComplex cc = qbetti::build_chain(g);
        qbetti::DiracOperator b = qbetti::dirac(cc.chain);
        IntMatrix b2 = b.m * b.m;

        // one trailing zero-size sector for the empty map above the top
        REQUIRE(b.sector_count() == cc.top_dimension() + 1);
        REQUIRE(b.sector_size.back() == 0);
        for (int k = 1; k <= cc.top_dimension(); ++k) {
            const int off = b.sector_offset[static_cast<std::size_t>(k) - 1];
            const int sz = b.sector_size[static_cast<std::size_t>(k) - 1];
            IntMatrix blk = b2.block(off, off, sz, sz);
            REQUIRE(blk == qbetti::laplacian(cc.lower_of(k), cc.upper_of(k)).m);
        }

        // off-diagonal blocks of B^2 vanish; B itself touches only adjacent sectors
        const int dim = b.dimension();
        for (int i = 0; i < dim; ++i) {
            int nnz_row = 0;
            for (int j = 0; j < dim; ++j) {
                REQUIRE(std::abs(b.m(i, j)) <= 1);
                nnz_row += b.m(i, j) != 0;
            }
            REQUIRE(nnz_row <= n);
        }
        for (int ka = 1; ka <= cc.top_dimension(); ++ka)
            for (int kb = 1; kb <= cc.top_dimension(); ++kb) {
                const IntMatrix blk =
                    b.m.block(b.sector_offset[static_cast<std::size_t>(ka) - 1],
                              b.sector_offset[static_cast<std::size_t>(kb) - 1],
                              b.sector_size[static_cast<std::size_t>(ka) - 1],
                              b.sector_size[static_cast<std::size_t>(kb) - 1]);
                if (std::abs(ka - kb) != 1) REQUIRE(blk.is_zero());
                const IntMatrix blk2 =
                    b2.block(b.sector_offset[static_cast<std::size_t>(ka) - 1],
                             b.sector_offset[static_cast<std::size_t>(kb) - 1],
                             b.sector_size[static_cast<std::size_t>(ka) - 1],
                             b.sector_size[static_cast<std::size_t>(kb) - 1]);
                if (ka != kb) REQUIRE(blk2.is_zero());
            }

        // kernel agreement between B and B^2
        REQUIRE(qbetti::exact_rank(b.m) == qbetti::exact_rank(b2));
    }
}

TEST_CASE("spectrum reports") {
    // zero laplacian: everything kernel, lambda_min absent
    qbetti::Laplacian zero{1, IntMatrix(3, 3)};
    qbetti::SpectrumReport zr = qbetti::spectrum(zero);
    REQUIRE(zr.kernel_dim == 3);
    REQUIRE_FALSE(zr.lambda_min.has_value());
    REQUIRE(zr.lambda_max == 0.0);

    // single edge, k=1: {0, 2}, gershgorin exactly 2
    ChainComplex ce = qbetti::build_chain(single_edge());
    qbetti::SpectrumReport er =
        qbetti::spectrum(qbetti::laplacian(ce.lower_of(1), ce.upper_of(1)));
    REQUIRE(er.kernel_dim == 1);
    REQUIRE(er.lambda_min.has_value());
    REQUIRE(std::abs(*er.lambda_min - 2.0) < 1e-12);
    REQUIRE(std::abs(er.lambda_max - 2.0) < 1e-12);
    REQUIRE(er.gershgorin_bound == 2.0);

    // 4-cycle, k=2: eigenvalues {0, 2, 2, 4}
    ChainComplex cy = qbetti::build_chain(four_cycle());
    qbetti::SpectrumReport cr =
        qbetti::spectrum(qbetti::laplacian(cy.lower_of(2), cy.upper_of(2)));
    REQUIRE(cr.size() == 4);
    REQUIRE(cr.kernel_dim == 1);
    const std::vector<double> expect = {0.0, 2.0, 2.0, 4.0};
    for (int i = 0; i < 4; ++i) REQUIRE(std::abs(cr.eigenvalues[i] - expect[i]) < 1e-9);
    REQUIRE(cr.lambda_max <= cr.gershgorin_bound);

    REQUIRE_THROWS_AS(qbetti::spectrum(qbetti::Laplacian{1, IntMatrix(0, 0)}),
                      std::invalid_argument);
}

TEST_CASE("chain complex construction") {
    ChainComplex cc = qbetti::build_chain(four_cycle());
    REQUIRE(cc.top_dimension() == 2);
    REQUIRE(cc.sets[0].size() == 4);
    REQUIRE(cc.sets[1].size() == 4);
    REQUIRE(cc.chain.size() == 3);
    REQUIRE(cc.upper_of(2).m.cols() == 0);
    REQUIRE(cc.upper_of(2).m.rows() == 4);

    ChainComplex k4 = qbetti::build_chain(complete(4));
    REQUIRE(k4.top_dimension() == 4);
    REQUIRE(k4.sets[3].size() == 1);
}
