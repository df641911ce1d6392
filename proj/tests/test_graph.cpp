#include "support.hpp"
#include "theta6/faces.hpp"

#include <gtest/gtest.h>

using namespace theta6;

namespace {

Point rotate60(const Point& p) { return Point(Scalar(-p[2]), Scalar(-p[0])); }
Point reflect(const Point& p) { return Point(p[0], p[2]); }

std::vector<std::pair<int, int>> pairs(const ProximityGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

TEST(Graph, ThreeConstructionsAgree) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto pts = fixtures::uniform(5 + static_cast<int>(seed), seed);
        auto oracle = build_by_oracle(pts);
        auto fast = build_fast(pts);
        auto halves = merge(build_half(pts, Orientation::up), build_half(pts, Orientation::down));
        EXPECT_EQ(oracle.edges, fast.edges) << seed;
        EXPECT_EQ(oracle.edges, halves.edges) << seed;
    }
}

TEST(Graph, LatticeSetsAgreeToo) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        auto pts = fixtures::lattice_set(rng, 3 + trial % 20, 200);
        EXPECT_EQ(build_by_oracle(pts).edges, build_fast(pts).edges);
    }
}

TEST(Graph, EdgeFlagsMatchEmptyIntroducingTriangles) {
    auto pts = fixtures::uniform(25, 4);
    auto g = build_fast(pts);
    for (const Edge& e : g.edges) {
        EXPECT_TRUE(e.up || e.down);
        for (Orientation o : {Orientation::up, Orientation::down}) {
            Triangle t = g.introducing(e, o);
            bool empty = true;
            for (int k = 0; k < g.size(); ++k)
                if (k != e.u && k != e.v && contains(t, pts[static_cast<std::size_t>(k)], Mode::closed)) empty = false;
            EXPECT_EQ(empty, o == Orientation::up ? e.up : e.down);
        }
    }
}

TEST(Graph, VerticalLineIsAPath) {
    auto pts = gen_vertical_line(9).points;
    auto g = build_fast(pts);
    ASSERT_EQ(g.edges.size(), 8u);
    for (const Edge& e : g.edges) EXPECT_EQ(e.v, e.u + 1);
}

TEST(Graph, EdgeCountBounds) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 3 + static_cast<int>(seed % 40);
        auto g = build_fast(fixtures::uniform(n, seed));
        EXPECT_GE(static_cast<int>(g.edges.size()), n - 1);
        EXPECT_LE(static_cast<int>(g.edges.size()), 5 * n - 12);
    }
}

TEST(Graph, HalfGraphsArePlane) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto pts = fixtures::uniform(30, seed);
        auto g = build_fast(pts);
        for (Orientation o : {Orientation::up, Orientation::down}) {
            std::vector<Edge> es;
            for (const Edge& e : g.edges)
                if (o == Orientation::up ? e.up : e.down) es.push_back(e);
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j) {
                    const Edge &a = es[i], &b = es[j];
                    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
                    EXPECT_FALSE(segments_intersect(planar(pts[static_cast<std::size_t>(a.u)]), planar(pts[static_cast<std::size_t>(a.v)]),
                                                    planar(pts[static_cast<std::size_t>(b.u)]), planar(pts[static_cast<std::size_t>(b.v)])));
                }
        }
    }
}

TEST(Graph, SymmetriesOfTheGrid) {
    auto pts = fixtures::uniform(30, 12);
    auto g = build_fast(pts);
    std::vector<Point> rot, ref;
    for (const auto& p : pts) {
        rot.push_back(rotate60(p));
        ref.push_back(reflect(p));
    }
    auto gr = build_fast(rot), gf = build_fast(ref);
    EXPECT_EQ(pairs(g), pairs(gr));
    EXPECT_EQ(pairs(g), pairs(gf));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        EXPECT_EQ(g.edges[i].up, gr.edges[i].down);  // a 60 degree turn swaps up and down
        EXPECT_EQ(g.edges[i].up, gf.edges[i].up);
    }
}

TEST(Graph, InducedSubgraphAndComponents) {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    std::vector<int> label;
    EXPECT_EQ(component_labels(g, label), 2);
    std::vector<bool> removed{false, true, false, false, false};
    EXPECT_EQ(component_labels(g, label, &removed), 3);
    EXPECT_EQ(label[1], -1);
    std::vector<int> back;
    Graph h = induced(g, {true, false, true, true, true}, &back);
    EXPECT_EQ(h.size(), 4);
    EXPECT_EQ(back, (std::vector<int>{0, 2, 3, 4}));
}

TEST(Graph, CoordinateRanksRejectTies) {
    std::vector<Point> pts{Point(Scalar(1), Scalar(2)), Point(Scalar(1), Scalar(5))};
    EXPECT_THROW(coordinate_ranks(pts), GeneralPositionError);
}
