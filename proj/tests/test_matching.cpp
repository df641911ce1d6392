#include "support.hpp"
#include "theta6/matching.hpp"

#include <gtest/gtest.h>

using namespace theta6;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int density_percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < density_percent) g.add_edge(u, v);
    return g;
}

// Exhaustive maximum matching: match or skip the lowest free vertex.
int brute_matching(const Graph& g, std::uint32_t used = 0) {
    int v = 0;
    while (v < g.size() && (used >> v & 1)) ++v;
    if (v == g.size()) return 0;
    int best = brute_matching(g, used | 1u << v);
    for (int w : g.neighbors(v))
        if (!(used >> w & 1)) best = std::max(best, 1 + brute_matching(g, used | 1u << v | 1u << w));
    return best;
}

bool is_matching(const Graph& g, const Matching& m) {
    std::vector<int> seen(static_cast<std::size_t>(g.size()), 0);
    for (auto [u, v] : m.edges) {
        const auto& nb = g.neighbors(u);
        if (std::find(nb.begin(), nb.end(), v) == nb.end()) return false;
        if (seen[static_cast<std::size_t>(u)]++ || seen[static_cast<std::size_t>(v)]++) return false;
    }
    return true;
}

}  // namespace

TEST(Matching, AgreesWithBruteForceOnSmallGraphs) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + trial % 10;
        Graph g = random_graph(rng, n, 10 + trial % 60);
        Matching m = max_matching(g);
        EXPECT_TRUE(is_matching(g, m));
        EXPECT_EQ(static_cast<int>(m.size()), brute_matching(g)) << trial;
        EXPECT_EQ(m.unmatched.size() + 2 * m.size(), static_cast<std::size_t>(n));
    }
}

TEST(Matching, BlossomsAreHandled) {
    // Two triangles joined through a path: needs blossom contraction.
    Graph g(8);
    for (auto [u, v] : {std::pair(0, 1), {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}})
        g.add_edge(u, v);
    EXPECT_EQ(max_matching(g).size(), 4u);
}

TEST(Matching, TutteBergeIdentity) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + trial % 13;
        Graph g = random_graph(rng, n, 15 + trial % 40);
        int deficiency = n - 2 * static_cast<int>(max_matching(g).size());
        auto exhaustive = tutte_berge(g, SearchMode::exhaustive);
        auto ge = gallai_edmonds_witness(g);
        EXPECT_EQ(exhaustive.deficiency, deficiency);
        EXPECT_EQ(ge.deficiency, deficiency);
        EXPECT_LE(ge.odd_components, ge.comp);
        EXPECT_EQ(evaluate_tutte_set(g, ge.S).deficiency, ge.deficiency);
    }
}

TEST(Matching, SampledSearchIncludesTheGallaiEdmondsSet) {
    auto pts = fixtures::uniform(40, 2);
    Graph g = build_fast(pts).graph();
    auto w = tutte_berge(g, SearchMode::sampled, 1, 50);
    EXPECT_EQ(w.deficiency, 40 - 2 * static_cast<int>(max_matching(g).size()));
}

TEST(Matching, ExhaustiveSearchHasASizeLimit) {
    Graph g(kExhaustiveLimit + 1);
    EXPECT_THROW(tutte_berge(g, SearchMode::exhaustive), std::invalid_argument);
}

TEST(Matching, ComponentExcessOfAStar) {
    Graph star(6);
    for (int leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf);
    auto w = max_component_excess(star, SearchMode::exhaustive);
    EXPECT_EQ(w.excess, 4);
    EXPECT_EQ(w.S, std::vector<int>{0});
}

TEST(Matching, ThetaGraphsOnSmallSets) {
    // Near-perfect matchings are typical on random sets.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        int n = 3 + static_cast<int>(seed % 30);
        auto g = build_fast(fixtures::uniform(n, seed)).graph();
        int mu = static_cast<int>(max_matching(g).size());
        EXPECT_GE(7 * mu, 3 * n - 8);
    }
}
