#include "support.hpp"
#include "theta6/faces.hpp"

#include <gtest/gtest.h>

using namespace theta6;

namespace {

PlaneGraph square(bool diagonal, bool center) {
    PlaneGraph pg;
    for (auto [u, v] : {std::pair(0, 0), {4, 0}, {4, 4}, {0, 4}}) pg.pos.push_back({Scalar(u), Scalar(v)});
    if (center) pg.pos.push_back({Scalar(1), Scalar(2)});
    pg.graph = Graph(static_cast<int>(pg.pos.size()));
    for (int i = 0; i < 4; ++i) pg.graph.add_edge(i, (i + 1) % 4);
    if (diagonal) pg.graph.add_edge(0, 2);
    for (int i = 0; i < pg.graph.size(); ++i) pg.original.push_back(i);
    return pg;
}

int inner_face(const FaceReport& r) {
    for (std::size_t f = 0; f < r.faces.size(); ++f)
        if (static_cast<int>(f) != r.outer) return static_cast<int>(f);
    return -1;
}

}  // namespace

TEST(Faces, SquareFaceDegrees) {
    auto r = faces(square(false, false));
    ASSERT_EQ(r.faces.size(), 2u);
    int f = inner_face(r);
    EXPECT_EQ(r.faces[static_cast<std::size_t>(f)].degree, 4);
    EXPECT_EQ(face_degree(r, f), 4);
    auto split = faces(square(true, false));
    EXPECT_EQ(split.faces.size(), 3u);
    for (std::size_t g = 0; g < split.faces.size(); ++g)
        if (static_cast<int>(g) != split.outer) {
            EXPECT_EQ(split.faces[g].degree, 3);
        }
}

TEST(Faces, IsolatedVertexAddsTwo) {
    auto r = faces(square(false, true));
    int f = inner_face(r);
    EXPECT_EQ(r.faces[static_cast<std::size_t>(f)].isolated, 1);
    EXPECT_EQ(r.faces[static_cast<std::size_t>(f)].degree, 6);
    EXPECT_EQ(face_degree(r, f), 6);
    EXPECT_EQ(r.locate({Scalar(3), Scalar(3)}), f);
    EXPECT_EQ(r.locate({Scalar(9), Scalar(9)}), r.outer);
}

TEST(Faces, CrossingEdgesAreRejected) {
    PlaneGraph pg = square(true, false);
    pg.graph.add_edge(1, 3);
    EXPECT_THROW(faces(pg), std::exception);
}

TEST(Faces, SurroundPointsLieInTheirCones) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto pts = fixtures::uniform(15, seed);
        auto aug = augment(pts);
        for (const auto& p : pts)
            for (int i = 0; i < 6; ++i) EXPECT_EQ(cone_index(p, aug.surround[static_cast<std::size_t>(i)]), i + 1);
        Region r = bounding_region(pts);
        for (const auto& a : aug.surround) EXPECT_FALSE(contains(r.up, a, Mode::closed) && contains(r.down, a, Mode::closed));
    }
}

// fig3 configuration: one component in a down-face of degree 3 whose
// up-face has degree 4.
TEST(Faces, FigureThreeProfile) {
    auto inst = gen_fig3();
    auto down = induced_face_profile(inst.points, inst.subset, Orientation::down);
    auto up = induced_face_profile(inst.points, inst.subset, Orientation::up);
    EXPECT_EQ(down.components, 1);
    EXPECT_EQ(down.f3, 1);
    EXPECT_EQ(up.representative_degree, std::vector<int>{4});
    EXPECT_EQ(up.f5plus, 0);
    EXPECT_GT(down.f3, up.f5plus);  // the strengthened inequality fails here
    EXPECT_LE(down.f3, up.f4plus);
}

TEST(Faces, ProfilesSatisfyEulerAndLemmaInequalities) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + trial % 18;
        auto pts = fixtures::uniform(n, static_cast<std::uint64_t>(trial));
        std::vector<bool> s(static_cast<std::size_t>(n));
        for (auto&& x : s) x = rng() % 3 != 0;
        auto up = induced_face_profile(pts, s, Orientation::up);
        auto down = induced_face_profile(pts, s, Orientation::down);
        for (const auto* p : {&up, &down}) {
            EXPECT_EQ(p->degree_sum, 2 * p->vertex_count - 4);
            EXPECT_EQ(p->degree_mismatches, 0);
            EXPECT_LE(p->max_components_per_face, 1);
            EXPECT_EQ(p->f3 + p->f4plus, p->components);
        }
        EXPECT_LE(up.f3, down.f4plus);
        EXPECT_LE(down.f3, up.f4plus);
    }
}

TEST(Faces, EmptyComplementHasNoComponents) {
    auto pts = fixtures::uniform(8, 1);
    auto p = induced_face_profile(pts, std::vector<bool>(8, true), Orientation::up);
    EXPECT_EQ(p.components, 0);
    EXPECT_EQ(p.f3 + p.f4plus, 0);
}
