#include "support.hpp"
#include "theta6/coloring.hpp"
#include "theta6/spanning.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace theta6;

namespace {

// Kruskal over all pairs; the sorted weight list is the same for every MST.
std::vector<Scalar> kruskal_weights(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::tuple<Scalar, int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.emplace_back(smallest_triangle(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)], Orientation::up).size(), u, v);
    std::sort(all.begin(), all.end());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::vector<Scalar> out;
    for (auto& [w, u, v] : all)
        if (find(u) != find(v)) {
            parent[static_cast<std::size_t>(find(u))] = find(v);
            out.push_back(w);
        }
    return out;
}

}  // namespace

TEST(Spanning, MstMatchesKruskalAndLiesInBothHalves) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto pts = fixtures::uniform(5 + static_cast<int>(seed), seed);
        auto tree = mst_td(pts);
        ASSERT_EQ(tree.edges.size(), pts.size() - 1);
        std::vector<Scalar> w;
        for (auto [u, v] : tree.edges) w.push_back(smallest_triangle(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)], Orientation::up).size());
        std::sort(w.begin(), w.end());
        EXPECT_EQ(w, kruskal_weights(pts));
        auto g = build_fast(pts);
        for (auto [u, v] : tree.edges) {
            auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const Edge& e) { return e.u == u && e.v == v; });
            ASSERT_NE(it, g.edges.end());
            EXPECT_TRUE(it->up && it->down);
        }
    }
}

TEST(Spanning, UpAndDownSizesAgree) {
    auto pts = fixtures::uniform(10, 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            EXPECT_EQ(smallest_triangle(pts[i], pts[j], Orientation::up).size(), smallest_triangle(pts[i], pts[j], Orientation::down).size());
}

TEST(Spanning, PathsStayInsideTheTriangle) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto pts = fixtures::uniform(20, seed);
        auto g = build_fast(pts);
        for (int p = 0; p < 20; ++p)
            for (int q = p + 1; q < 20; ++q)
                for (Orientation o : {Orientation::up, Orientation::down}) {
                    auto path = path_in_triangle(g, p, q, o);
                    ASSERT_GE(path.size(), 2u);
                    EXPECT_EQ(path.front(), p);
                    EXPECT_EQ(path.back(), q);
                    Triangle outer = smallest_triangle(pts[static_cast<std::size_t>(p)], pts[static_cast<std::size_t>(q)], o);
                    for (int v : path) EXPECT_TRUE(contains(outer, pts[static_cast<std::size_t>(v)], Mode::closed));
                }
    }
}

TEST(Coloring, DegeneracyColoringAndIndependentSet) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 3 + static_cast<int>(seed * 3);
        auto g = build_fast(fixtures::uniform(n, seed));
        Graph G = g.graph();
        auto d = degeneracy_order(G);
        EXPECT_EQ(d.order.size(), static_cast<std::size_t>(n));
        EXPECT_LE(d.value, 9);
        EXPECT_LE(min_degree(G), 9);
        auto color = greedy_color(G);
        for (const Edge& e : g.edges) EXPECT_NE(color[static_cast<std::size_t>(e.u)], color[static_cast<std::size_t>(e.v)]);
        EXPECT_LE(color_count(color), d.value + 1);
        auto ind = greedy_independent(G);
        EXPECT_GE(10 * static_cast<int>(ind.size()), n);
        for (const Edge& e : g.edges)
            EXPECT_FALSE(std::count(ind.begin(), ind.end(), e.u) && std::count(ind.begin(), ind.end(), e.v));
    }
}

TEST(Coloring, CompleteGraphNeedsAllColors) {
    Graph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    EXPECT_EQ(degeneracy_order(k5).value, 4);
    EXPECT_EQ(color_count(greedy_color(k5)), 5);
    EXPECT_EQ(greedy_independent(k5).size(), 1u);
    EXPECT_EQ(min_degree(k5), 4);
}
