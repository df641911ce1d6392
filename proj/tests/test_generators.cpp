#include "support.hpp"
#include "theta6/blocking.hpp"
#include "theta6/coloring.hpp"
#include "theta6/matching.hpp"

#include <gtest/gtest.h>

using namespace theta6;

namespace {

std::size_t exact_family(const std::vector<Point>& pts, Mode mode) {
    return max_disjoint_triangles(pts, mode, Solver::exact).triangles.size();
}

}  // namespace

TEST(Generators, AlphaClustersReachThreeQuarters) {
    for (int t = 1; t <= 3; ++t) {
        auto inst = gen_alpha_clusters(t);
        ASSERT_EQ(inst.points.size(), static_cast<std::size_t>(4 * t));
        EXPECT_EQ(4 * exact_family(inst.points, Mode::open), 3 * inst.points.size()) << t;
    }
}

TEST(Generators, StrongClustersReachTwoFifths) {
    for (int t = 1; t <= 2; ++t) {
        auto inst = gen_strong_clusters(t);
        ASSERT_EQ(inst.points.size(), static_cast<std::size_t>(5 * t));
        EXPECT_EQ(5 * exact_family(inst.points, Mode::closed), 2 * inst.points.size()) << t;
    }
}

TEST(Generators, GadgetFamiliesAreCertified) {
    for (int t = 0; t <= 3; ++t) {
        auto inst = gen_blocking_gadgets(t);
        std::size_t n = inst.points.size();
        ASSERT_EQ(n, static_cast<std::size_t>(4 * t + 2));
        EXPECT_TRUE(valid_family(inst.points, inst.family));
        EXPECT_EQ(4 * inst.family.triangles.size(), 5 * n - 6) << t;
        if (t <= 2) {
            EXPECT_EQ(exact_family(inst.points, Mode::open), inst.family.triangles.size());
        }
    }
}

TEST(Generators, ManyEdges) {
    EXPECT_EQ(build_fast(gen_many_edges(11).points).edges.size(), 38u);
    for (int n = 7; n <= 30; n += 3) EXPECT_EQ(build_fast(gen_many_edges(n).points).edges.size(), static_cast<std::size_t>(5 * n - 17)) << n;
}

TEST(Generators, MinimumDegreeSeven) {
    auto inst = gen_min_degree7();
    ASSERT_EQ(inst.points.size(), 26u);
    EXPECT_EQ(min_degree(build_fast(inst.points).graph()), 7);
}

TEST(Generators, FigureOne) {
    auto pts = gen_fig1().points;
    ASSERT_EQ(pts.size(), 6u);
    EXPECT_EQ(max_matching(build_fast(pts).graph()).size(), 3u);
    EXPECT_EQ(min_blocking_set(pts, Solver::exact).size(), 5u);
}

TEST(Generators, VerticalAndUniform) {
    EXPECT_EQ(gen_vertical_line(5).points.size(), 5u);
    auto a = gen_uniform(50, 9), b = gen_uniform(50, 9);
    EXPECT_EQ(a.points, b.points);
    EXPECT_FALSE(general_position(a.points).has_value());
    EXPECT_NE(gen_uniform(50, 10).points, a.points);
    EXPECT_THROW(gen_uniform(0, 1), std::invalid_argument);
}

TEST(Generators, ProvenanceRecordsValidation) {
    auto inst = gen_many_edges(11);
    EXPECT_EQ(inst.provenance.generator, "many-edges");
    EXPECT_FALSE(inst.provenance.checks.empty());
}
