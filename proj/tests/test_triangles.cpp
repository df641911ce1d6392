#include "support.hpp"
#include "theta6/blocking.hpp"
#include "theta6/matching.hpp"

#include <gtest/gtest.h>

using namespace theta6;

namespace {

int brute_family(const std::vector<IntroTriangle>& tris, Mode mode, std::size_t start = 0, std::vector<const Triangle*> chosen = {}) {
    int best = static_cast<int>(chosen.size());
    for (std::size_t k = start; k < tris.size(); ++k) {
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const Triangle* c) { return disjoint(tris[k].triangle, *c, mode); });
        if (!ok) continue;
        auto next = chosen;
        next.push_back(&tris[k].triangle);
        best = std::max(best, brute_family(tris, mode, k + 1, next));
    }
    return best;
}

}  // namespace

TEST(Triangles, TwoPerEdgeWhenBothFlagsSet) {
    auto pts = fixtures::uniform(20, 1);
    auto g = build_fast(pts);
    std::size_t expect = 0;
    for (const Edge& e : g.edges) expect += e.up + e.down;
    auto tris = introducing_triangles(g);
    EXPECT_EQ(tris.size(), expect);
    for (const auto& t : tris) EXPECT_TRUE(g.has_edge(t.u, t.v));
}

TEST(Triangles, ExactSolverMatchesBruteForce) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        auto pts = fixtures::lattice_set(rng, 3 + trial % 5, 100);
        auto tris = introducing_triangles(pts);
        for (Mode mode : {Mode::open, Mode::closed}) {
            auto fam = max_disjoint_triangles(tris, mode, Solver::exact);
            EXPECT_TRUE(fam.exact);
            EXPECT_TRUE(valid_family(pts, fam));
            EXPECT_EQ(static_cast<int>(fam.triangles.size()), brute_family(tris, mode)) << trial;
            auto greedy = max_disjoint_triangles(tris, mode, Solver::greedy);
            EXPECT_TRUE(valid_family(pts, greedy));
            EXPECT_LE(greedy.triangles.size(), fam.triangles.size());
        }
    }
}

TEST(Triangles, StrongMatchingIsAMatching) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto pts = fixtures::uniform(12, seed);
        auto strong = max_disjoint_triangles(pts, Mode::closed, Solver::exact);
        auto alpha = max_disjoint_triangles(pts, Mode::open, Solver::exact);
        auto mu = max_matching(build_fast(pts).graph()).size();
        EXPECT_LE(strong.triangles.size(), mu);
        EXPECT_LE(strong.triangles.size(), alpha.triangles.size());
    }
}

TEST(Triangles, ValidFamilyRejectsOverlapAndForeignTriangles) {
    auto pts = gen_fig1().points;
    auto fam = max_disjoint_triangles(pts, Mode::open, Solver::exact);
    ASSERT_GE(fam.triangles.size(), 2u);
    auto dup = fam;
    dup.triangles.push_back(fam.triangles.front());
    EXPECT_FALSE(valid_family(pts, dup));
    auto wrong = fam;
    wrong.triangles.front().triangle.t[0] -= 1;
    EXPECT_FALSE(valid_family(pts, wrong));
}

TEST(Triangles, ExactSolverHasASizeGuard) {
    auto pts = fixtures::uniform(60, 1);
    EXPECT_THROW(max_disjoint_triangles(pts, Mode::open, Solver::exact), std::invalid_argument);
}
