#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace theta6;

namespace {

// Cone from the polar angle of q - apex, C1 starting at the positive x-axis.
int cone_by_angle(const Point& apex, const Point& q) {
    auto a = cartesian(apex), b = cartesian(q);
    double deg = std::atan2(b[1] - a[1], b[0] - a[0]) * 180.0 / M_PI;
    if (deg < 0) deg += 360;
    return static_cast<int>(deg / 60) + 1;
}

}  // namespace

TEST(Geometry, TriangularCoordinatesSumToZero) {
    Point p(Scalar(3), Scalar(-5));
    EXPECT_EQ(p[0] + p[1] + p[2], 0);
    EXPECT_THROW(Point::from_tri(Scalar(1), Scalar(1), Scalar(1)), std::invalid_argument);
}

TEST(Geometry, CartesianConversionUsesTheGivenRoot) {
    Point p = from_cartesian(Scalar(2), Scalar(1), Scalar(2));  // sqrt3 := 2
    EXPECT_EQ(p[0], 1);
    EXPECT_EQ(p[1], Scalar(3, 2));
}

TEST(Geometry, ConeIndexAgreesWithPolarAngle) {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        auto pts = fixtures::lattice_set(rng, 2, 1000);
        int by_angle = cone_by_angle(pts[0], pts[1]);
        // Skip pairs within a hair of a cone boundary, where doubles are unreliable.
        auto a = cartesian(pts[0]), b = cartesian(pts[1]);
        double deg = std::atan2(b[1] - a[1], b[0] - a[0]) * 180.0 / M_PI;
        if (std::fabs(std::remainder(deg, 60.0)) < 1e-6) continue;
        EXPECT_EQ(cone_index(pts[0], pts[1]), by_angle);
        EXPECT_EQ(cone_index(pts[1], pts[0]), (by_angle + 2) % 6 + 1);
        ++checked;
    }
    EXPECT_GT(checked, 3900);
}

TEST(Geometry, VerticalDisplacementLandsInConeTwo) {
    Point p(Scalar(0), Scalar(0));
    EXPECT_EQ(cone_index(p, Point(Scalar(2), Scalar(-1))), 2);
    EXPECT_EQ(cone_index(p, Point(Scalar(-2), Scalar(1))), 5);
}

TEST(Geometry, SmallestTriangleContainsBothEndpointsOnItsBoundary) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        auto pts = fixtures::lattice_set(rng, 2);
        for (Orientation o : {Orientation::up, Orientation::down}) {
            Triangle t = smallest_triangle(pts[0], pts[1], o);
            EXPECT_TRUE(contains(t, pts[0], Mode::closed));
            EXPECT_TRUE(contains(t, pts[1], Mode::closed));
            EXPECT_FALSE(contains(t, pts[0], Mode::open));
            EXPECT_GT(t.size(), 0);
            for (const Point& c : t.corners()) EXPECT_TRUE(contains(t, c, Mode::closed));
        }
    }
}

// Sampling oracle. Integer thresholds put every vertex of an intersection on
// the integer lattice, so a nonempty open (or closed) intersection always
// contains a point of the quarter grid.
TEST(Geometry, DisjointnessAgreesWithGridSampling) {
    std::mt19937_64 rng(21);
    int meets = 0, apart = 0, touching = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto pts = fixtures::lattice_set(rng, 4, 12);
        Triangle a = smallest_triangle(pts[0], pts[1], rng() % 2 ? Orientation::up : Orientation::down);
        Triangle b = smallest_triangle(pts[2], pts[3], rng() % 2 ? Orientation::up : Orientation::down);
        bool open = false, closed = false;
        for (int x = -48; x <= 100; ++x)
            for (int y = -48; y <= 100; ++y) {
                Point q(Scalar(x, 4), Scalar(y, 4));
                if (!contains(a, q, Mode::closed) || !contains(b, q, Mode::closed)) continue;
                closed = true;
                if (contains(a, q, Mode::open) && contains(b, q, Mode::open)) open = true;
            }
        EXPECT_EQ(interiors_disjoint(a, b), !open);
        EXPECT_EQ(disjoint_closed(a, b), !closed);
        meets += open;
        apart += !closed;
        touching += closed && !open;
    }
    EXPECT_GT(meets, 20);
    EXPECT_GT(apart, 20);
}

TEST(Geometry, TrianglesSharingOnlyACornerAreInteriorDisjointButNotClosedDisjoint) {
    // Up triangle with apex corner at the origin and a down triangle hanging from it.
    Triangle up{Orientation::up, {Scalar(0), Scalar(0), Scalar(-4)}};
    Triangle down{Orientation::down, {Scalar(0), Scalar(0), Scalar(4)}};
    EXPECT_TRUE(interiors_disjoint(up, down));
    EXPECT_FALSE(disjoint_closed(up, down));
}

TEST(Geometry, GeneralPositionReportsTheSharedCoordinate) {
    std::vector<Point> pts{Point(Scalar(1), Scalar(2)), Point(Scalar(3), Scalar(4)), Point(Scalar(5), Scalar(2))};
    auto v = general_position(pts);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->first, 0);
    EXPECT_EQ(v->second, 2);
    EXPECT_EQ(v->coordinate, 1);
    EXPECT_THROW(require_general_position(pts), GeneralPositionError);
    EXPECT_THROW(cone_index(pts[0], pts[2]), GeneralPositionError);
}

TEST(Geometry, BoundingRegionContainsEveryPoint) {
    auto pts = fixtures::uniform(40, 3);
    Region r = bounding_region(pts);
    for (const auto& p : pts) {
        EXPECT_TRUE(contains(r.up, p, Mode::closed));
        EXPECT_TRUE(contains(r.down, p, Mode::closed));
    }
}

TEST(Geometry, SegmentIntersection) {
    Vec2 a{Scalar(0), Scalar(0)}, b{Scalar(2), Scalar(2)}, c{Scalar(0), Scalar(2)}, d{Scalar(2), Scalar(0)}, e{Scalar(3), Scalar(3)};
    EXPECT_TRUE(segments_intersect(a, b, c, d));
    EXPECT_FALSE(segments_intersect(a, c, d, e));
    EXPECT_EQ(orient(a, d, b), 1);
}
