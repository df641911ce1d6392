#include "support.hpp"
#include "theta6/io.hpp"

#include <gtest/gtest.h>

using namespace theta6;

TEST(Io, PointSetRoundTrip) {
    auto inst = gen_fig3();
    json doc = point_set_to_json(inst.points, inst.subset);
    auto back = point_set_from_json(json::parse(doc.dump()));
    EXPECT_EQ(back.points, inst.points);
    EXPECT_EQ(back.subset, inst.subset);
}

TEST(Io, CartesianInputSharesOneRoot) {
    json doc = {{"coords", "xy"}, {"precision", 5}, {"points", json::array({json::array({"1", "0.5"}), json::array({"2/3", 1})})}};
    auto ps = point_set_from_json(doc);
    Scalar r = sqrt3_approx(5);
    EXPECT_EQ(ps.points[0], from_cartesian(Scalar(1), Scalar(1, 2), r));
    EXPECT_EQ(ps.points[1], from_cartesian(Scalar(2, 3), Scalar(1), r));
}

TEST(Io, MalformedInputIsRejected) {
    EXPECT_THROW(point_set_from_json(json::parse(R"({"pts": []})")), ParseError);
    EXPECT_THROW(point_set_from_json(json::parse(R"({"coords": "polar", "points": []})")), ParseError);
    EXPECT_THROW(point_set_from_json(json::parse(R"({"points": [["1", "2"]]})")), ParseError);
    EXPECT_THROW(point_set_from_json(json::parse(R"({"points": [["1", "2", "3"]]})")), std::invalid_argument);
    EXPECT_THROW(point_set_from_json(json::parse(R"({"points": [["1", "-1", "0"]], "subset": [true, false]})")), ParseError);
}

TEST(Io, GraphAndFamilyRoundTrip) {
    auto inst = gen_blocking_gadgets(1);
    auto g = build_fast(inst.points);
    auto edges = edges_from_json(json::parse(graph_to_json(g).dump()));
    EXPECT_EQ(edges, g.edges);
    auto fam = family_from_json(json::parse(family_to_json(inst.family).dump()));
    EXPECT_EQ(fam.triangles, inst.family.triangles);
    EXPECT_TRUE(valid_family(inst.points, fam));
}

TEST(Io, SvgIsDeterministicWithOverlays) {
    auto pts = gen_fig1().points;
    auto g = build_fast(pts);
    RenderOptions opt;
    opt.triangles = true;
    opt.matching = max_matching(g.graph()).edges;
    std::string a = render_svg(g, opt), b = render_svg(g, opt);
    EXPECT_EQ(a, b);
    std::size_t thick = 0;
    for (std::size_t pos = 0; (pos = a.find("stroke-width=\"5\"", pos)) != std::string::npos; ++pos) ++thick;
    EXPECT_EQ(thick, 3u);
}

TEST(Io, EmptyGraphRendersFrameOnly) {
    std::string svg = render_svg(ProximityGraph{});
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_EQ(svg.find("<line"), std::string::npos);
    EXPECT_EQ(svg.find("<circle"), std::string::npos);
}
