#include "centerkit/fiber_graph.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace centerkit;

namespace {

std::size_t count_kind(const FiberGraph& g, GraphEdge::Kind kind) {
    std::size_t c = 0;
    for (const auto& e : g.edges()) c += e.kind == kind;
    return c;
}

long formula_rank(const LineArrangement& arr) {
    return static_cast<long>(arr.d() - 1) * arr.total_multiplicity() + 1;
}

TEST(GraphG, CountsFromConstructionRules) {
    const auto g111 = build_graph(fixture::standard({1, 1, 1}));
    EXPECT_EQ(g111.vertex_count(), 6u);
    EXPECT_EQ(g111.edge_count(), 9u);
    EXPECT_EQ(g111.betti1(), 4u);
    const auto g123 = build_graph(fixture::standard({1, 2, 3}));
    EXPECT_EQ(g123.vertex_count(), 9u);
    EXPECT_EQ(g123.edge_count(), 15u);
    EXPECT_EQ(g123.betti1(), 7u);
    const auto g1234 = build_graph(fixture::standard({1, 2, 3, 4}));
    EXPECT_EQ(g1234.vertex_count(), 17u);
    EXPECT_EQ(g1234.edge_count(), 37u);
    EXPECT_EQ(g1234.betti1(), 21u);
    EXPECT_TRUE(g1234.connected());
}

TEST(GraphGcheck, CountsFromConstructionRules) {
    const auto g111 = build_real_graph(fixture::standard({1, 1, 1}));
    EXPECT_EQ(g111.vertex_count(), 3u);
    EXPECT_EQ(g111.edge_count(), 6u);
    EXPECT_EQ(count_kind(g111, GraphEdge::Kind::Segment), 3u);
    EXPECT_EQ(g111.loop_count(), 3u);
    EXPECT_EQ(g111.betti1(), 4u);
    const auto g123 = build_real_graph(fixture::standard({1, 2, 3}));
    EXPECT_EQ(g123.vertex_count(), 3u);
    EXPECT_EQ(g123.edge_count(), 9u);
    EXPECT_EQ(g123.betti1(), 7u);
    const auto g4 = build_real_graph(fixture::standard({1, 1, 1, 1}));
    EXPECT_EQ(g4.vertex_count(), 6u);
    EXPECT_EQ(g4.edge_count(), 14u);
    EXPECT_EQ(count_kind(g4, GraphEdge::Kind::Segment), 8u);
    EXPECT_EQ(g4.loop_count(), 6u);
    EXPECT_EQ(g4.betti1(), 9u);
}

TEST(GraphGcheck, VertexCountIsSumOfPairGcds) {
    const auto arr = fixture::standard({2, 4, 6, 3});
    long expected = 0;
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j) expected += arr.pair_gcd(i, j);
    const auto g = build_real_graph(arr);
    EXPECT_EQ(static_cast<long>(g.vertex_count()), expected);
    EXPECT_EQ(static_cast<long>(g.loop_count()), expected);
}

TEST(H1Rank, Examples) {
    EXPECT_EQ(h1_rank(fixture::standard({1, 1, 1})), 4);
    EXPECT_EQ(h1_rank(fixture::standard({2, 4, 3})), 10);
    EXPECT_EQ(h1_rank(fixture::standard({1, 1, 1, 1})), 9);
}

TEST(Genus, Examples) {
    EXPECT_EQ(genus(fixture::standard({1, 1, 1})), 1);
    EXPECT_EQ(genus(fixture::standard({1, 2, 3})), 1);
    EXPECT_EQ(genus(fixture::standard({1, 1, 1, 1})), 3);
    EXPECT_EQ(genus_numerator(fixture::standard({1, 1, 1, 1})), 6);
}

TEST(BettiNumbers, BothModelsMatchFormulaOnRandomCorpus) {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const auto arr = fixture::random(seed, 3 + seed % 4, 6, false);
        const long expected = formula_rank(arr);
        EXPECT_EQ(static_cast<long>(build_graph(arr).betti1()), expected) << "seed " << seed;
        EXPECT_EQ(static_cast<long>(build_real_graph(arr).betti1()), expected) << "seed " << seed;
        const long num = genus_numerator(arr);
        EXPECT_GE(num, 0);
        EXPECT_EQ(num % 2, 0);
    }
}

TEST(CycleBasis, LoopsAreTheirOwnBasisElements) {
    const auto g = build_real_graph(fixture::standard({2, 4, 3}));
    std::size_t loops = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.edges()[e].kind != GraphEdge::Kind::Loop) continue;
        ++loops;
        const auto k = g.basis_index(e);
        ASSERT_TRUE(k.has_value());
        const auto flow = g.flow_of_basis_cycle(*k);
        for (std::size_t f = 0; f < flow.size(); ++f) EXPECT_EQ(flow[f], f == e ? 1 : 0);
    }
    EXPECT_EQ(loops, g.loop_count());
}

TEST(CycleBasis, FundamentalWalksAreClosedAndRoundTrip) {
    const auto g = build_real_graph(fixture::standard({1, 2, 3, 5}));
    for (std::size_t k = 0; k < g.betti1(); ++k) {
        const auto walk = g.fundamental_walk(k);
        ASSERT_FALSE(walk.empty());
        std::size_t at = walk.front().second > 0 ? g.edges()[walk.front().first].from : g.edges()[walk.front().first].to;
        const std::size_t start = at;
        for (const auto& [e, dir] : walk) {
            const auto& edge = g.edges()[e];
            ASSERT_EQ(dir > 0 ? edge.from : edge.to, at);
            at = dir > 0 ? edge.to : edge.from;
        }
        EXPECT_EQ(at, start);
        const auto c = g.cycle_from_flow(g.flow_of_basis_cycle(k));
        for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c.coefficients[j], j == k ? 1 : 0);
    }
}

TEST(CycleBasis, NonClosedFlowIsRejected) {
    const auto g = build_real_graph(fixture::standard({1, 1, 1}));
    std::vector<Rational> flow(g.edge_count(), Rational(0));
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (g.edges()[e].kind == GraphEdge::Kind::Segment) {
            flow[e] = 1;
            break;
        }
    EXPECT_THROW(g.cycle_from_flow(flow), FiberGraphError);
}

TEST(Winding, SaddleLoopExamples) {
    {
        const auto g = build_real_graph(fixture::standard({1, 1, 1}));
        const auto w = winding_matrix(g).apply(saddle_loop_class(g, 0, 1, 0));
        EXPECT_EQ(w, (std::vector<Rational>{1, -1, 0}));
    }
    {
        const auto g = build_real_graph(fixture::standard({2, 4, 3}));
        for (long h = 0; h < 2; ++h) {
            const auto w = winding_matrix(g).apply(saddle_loop_class(g, 0, 1, h));
            EXPECT_EQ(w, (std::vector<Rational>{2, -1, 0}));
        }
    }
}

TEST(Winding, WeightedSumVanishesAndRankIsD) {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        const auto arr = fixture::random(seed, 3 + seed % 4, 6, false);
        const auto W = winding_matrix(build_real_graph(arr)).W;
        ASSERT_EQ(W.rows(), arr.size());
        EXPECT_EQ(rank(W), arr.d());
        for (std::size_t k = 0; k < W.cols(); ++k) {
            Rational s(0);
            for (std::size_t i = 0; i < W.rows(); ++i) {
                s += Rational(arr.multiplicity(i)) * W(i, k);
                EXPECT_EQ(W(i, k).get_den(), 1) << "windings of closed cycles are integers";
            }
            EXPECT_EQ(s, 0);
        }
    }
}

TEST(CenterLifts, CountsAndSpans) {
    {
        const auto arr = fixture::standard({1, 1, 1});
        const auto g = build_real_graph(arr);
        EXPECT_EQ(center_cycle_lifts(g, bounded_faces(arr)[0]).size(), 1u);
    }
    {
        const auto arr = fixture::standard({1, 2, 3});
        const auto g = build_real_graph(arr);
        const auto lifts = center_cycle_lifts(g, bounded_faces(arr)[0]);
        EXPECT_EQ(lifts.size(), 6u);
        Subspace<Rational> span(g.betti1());
        for (const auto& l : lifts) span.insert(l.cycle.coefficients);
        // b_1 - d: the lifts of the single face already fill the annihilator
        EXPECT_EQ(span.dimension(), 5u);
    }
}

TEST(CenterLifts, HaveZeroWinding) {
    for (const auto& m : {std::vector<long>{1, 2, 3}, std::vector<long>{2, 4, 3}, std::vector<long>{1, 1, 1, 1},
                          std::vector<long>{3, 2, 5, 1, 4}}) {
        const auto arr = fixture::standard(m);
        const auto g = build_real_graph(arr);
        const auto W = winding_matrix(g);
        for (const auto& face : bounded_faces(arr))
            for (const auto& lift : center_cycle_lifts(g, face))
                for (const auto& w : W.apply(lift.cycle)) EXPECT_EQ(w, 0);
    }
}

TEST(SaddleLoops, CountAndIndependence) {
    const auto arr = fixture::standard({2, 4, 3, 1});
    const auto g = build_real_graph(arr);
    Subspace<Rational> span(g.betti1());
    std::size_t count = 0;
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j)
            for (long h = 0; h < arr.pair_gcd(i, j); ++h) {
                span.insert(saddle_loop_class(g, i, j, h).coefficients);
                ++count;
            }
    EXPECT_EQ(span.dimension(), count);
}

CycleClass expected_polygon_sum(const FiberGraph& g, const BoundedFace& face) {
    const auto a = face.side_multiplicities();
    const long prod = std::accumulate(a.begin(), a.end(), 1L, std::multiplies<>());
    CycleClass sum{std::vector<Rational>(g.betti1(), Rational(0))};
    const std::size_t s = a.size();
    for (std::size_t k = 0; k < s; ++k) {
        const auto& p = g.points()[face.sides[k].start_vertex];
        Rational coeff(prod, a[(k + s - 1) % s] * a[k]);
        coeff.canonicalize();
        sum += (coeff * corner_orientation(face, k)) * saddle_loop_class(g, p.i, p.j, 0);
    }
    return sum;
}

TEST(PolygonSums, TriangleCoefficients) {
    for (const auto& m : {std::vector<long>{1, 1, 1}, std::vector<long>{1, 2, 3}}) {
        const auto arr = fixture::standard(m);
        const auto g = build_real_graph(arr);
        const auto face = bounded_faces(arr)[0];
        EXPECT_EQ(polygon_saddle_sum(g, face), expected_polygon_sum(g, face));
    }
}

TEST(PolygonSums, SquareFaceHasUnitCoefficients) {
    const auto arr = fixture::standard({1, 1, 1, 1});
    const auto g = build_real_graph(arr);
    bool saw_square = false;
    for (const auto& face : bounded_faces(arr)) {
        const auto sum = polygon_saddle_sum(g, face);
        EXPECT_EQ(sum, expected_polygon_sum(g, face));
        if (face.corner_count() == 4) {
            saw_square = true;
            std::size_t nonzero = 0;
            for (const auto& c : sum.coefficients) {
                if (c != 0) ++nonzero;
                EXPECT_TRUE(c == 0 || c == 1 || c == -1);
            }
            EXPECT_EQ(nonzero, 4u);
        }
    }
    EXPECT_TRUE(saw_square);
}

TEST(PolygonSums, EqualFullMonodromyTurnUnderCoprimality) {
    for (const auto& m : {std::vector<long>{1, 2, 3}, std::vector<long>{2, 3, 5, 7}, std::vector<long>{1, 2, 3, 5, 7}}) {
        const auto arr = fixture::standard(m);
        const auto g = build_real_graph(arr);
        for (const auto& face : bounded_faces(arr)) {
            const auto a = face.side_multiplicities();
            const long prod = std::accumulate(a.begin(), a.end(), 1L, std::multiplies<>());
            EXPECT_EQ(center_cycle_lift(g, face, prod).cycle - center_cycle_lift(g, face, 0).cycle,
                      polygon_saddle_sum(g, face));
        }
    }
}

TEST(FiberGraph, ModelChecks) {
    const auto arr = fixture::standard({1, 1, 1});
    const auto g = build_graph(arr);
    EXPECT_EQ(g.model(), GraphModel::G);
    EXPECT_THROW(center_cycle_lift(g, bounded_faces(arr)[0], 0), FiberGraphError);
    LineArrangement bad({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {1, 1, 1});
    EXPECT_THROW(build_real_graph(bad), std::exception);
}

}  // namespace
