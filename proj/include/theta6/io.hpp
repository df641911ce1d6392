#pragma once

// JSON interchange (rationals as strings) and SVG rendering.

#include "theta6/blocking.hpp"
#include "theta6/generators.hpp"
#include "theta6/matching.hpp"
#include "theta6/triangles.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace theta6 {

using json = nlohmann::json;

inline constexpr unsigned kDefaultPrecision = 30;

inline Scalar scalar_from_json(const json& v) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(mpz_class(v.dump(), 10));
    if (v.is_number()) return parse_scalar(v.dump());
    throw ParseError("expected a number or a rational string");
}

inline json point_to_json(const Point& p) { return json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])}); }

inline Point point_from_tri(const json& v) {
    if (!v.is_array() || v.size() != 3) throw ParseError("tri point must be [l0, l1, l2]");
    Point p = Point::from_tri(scalar_from_json(v[0]), scalar_from_json(v[1]), scalar_from_json(v[2]));
    return p;
}

inline json points_to_json(std::span<const Point> pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

inline std::vector<Point> points_from_tri(const json& arr) {
    std::vector<Point> out;
    for (const auto& v : arr) out.push_back(point_from_tri(v));
    return out;
}

struct PointSet {
    std::vector<Point> points;
    std::vector<bool> subset;  // optional; empty when absent
    unsigned precision = kDefaultPrecision;
};

/// Reads `{"coords": "tri"|"xy", "points": [...], "precision": k}`. Cartesian
/// input shares one approximation of sqrt(3) across the whole set.
inline PointSet point_set_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("points")) throw ParseError("point set needs a \"points\" array");
    PointSet out;
    std::string coords = doc.value("coords", std::string("tri"));
    if (doc.contains("precision")) {
        long p = doc.at("precision").get<long>();
        if (p <= 0) throw ParseError("precision must be positive");
        out.precision = static_cast<unsigned>(p);
    }
    if (coords == "tri") {
        out.points = points_from_tri(doc.at("points"));
    } else if (coords == "xy") {
        const Scalar sqrt3 = sqrt3_approx(out.precision);
        for (const auto& v : doc.at("points")) {
            if (!v.is_array() || v.size() != 2) throw ParseError("xy point must be [x, y]");
            out.points.push_back(from_cartesian(scalar_from_json(v[0]), scalar_from_json(v[1]), sqrt3));
        }
    } else {
        throw ParseError("coords must be \"tri\" or \"xy\"");
    }
    if (doc.contains("subset")) {
        for (const auto& b : doc.at("subset")) out.subset.push_back(b.get<bool>());
        if (out.subset.size() != out.points.size()) throw ParseError("subset length differs from point count");
    }
    return out;
}

inline json provenance_to_json(const Provenance& p) {
    json params = json::object(), checks = json::object();
    for (const auto& [k, v] : p.parameters) params[k] = v;
    for (const auto& [k, v] : p.checks) checks[k] = v;
    return {{"generator", p.generator}, {"parameters", params}, {"validated", checks}};
}

inline json point_set_to_json(std::span<const Point> pts, const std::vector<bool>& subset = {}) {
    json doc = {{"coords", "tri"}, {"points", points_to_json(pts)}};
    if (!subset.empty()) doc["subset"] = subset;
    return doc;
}

inline json triangle_to_json(const IntroTriangle& t) {
    return {{"u", t.u},
            {"v", t.v},
            {"orientation", name(t.triangle.orientation)},
            {"t", json::array({to_string(t.triangle.t[0]), to_string(t.triangle.t[1]), to_string(t.triangle.t[2])})}};
}

inline IntroTriangle triangle_from_json(const json& v) {
    IntroTriangle t;
    t.u = v.at("u").get<int>();
    t.v = v.at("v").get<int>();
    std::string o = v.at("orientation").get<std::string>();
    if (o != "up" && o != "down") throw ParseError("orientation must be up or down");
    t.triangle.orientation = o == "up" ? Orientation::up : Orientation::down;
    const auto& th = v.at("t");
    if (!th.is_array() || th.size() != 3) throw ParseError("thresholds must have three entries");
    for (std::size_t i = 0; i < 3; ++i) t.triangle.t[i] = scalar_from_json(th[i]);
    return t;
}

inline json family_to_json(const TriangleFamily& f) {
    json tris = json::array();
    for (const auto& t : f.triangles) tris.push_back(triangle_to_json(t));
    return {{"mode", f.disjointness == Mode::open ? "interior" : "closed"}, {"exact", f.exact}, {"triangles", tris}};
}

inline TriangleFamily family_from_json(const json& v) {
    TriangleFamily f;
    std::string mode = v.value("mode", std::string("interior"));
    if (mode != "interior" && mode != "closed") throw ParseError("mode must be interior or closed");
    f.disjointness = mode == "interior" ? Mode::open : Mode::closed;
    f.exact = v.value("exact", false);
    for (const auto& t : v.at("triangles")) f.triangles.push_back(triangle_from_json(t));
    return f;
}

inline json graph_to_json(const ProximityGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"up", e.up}, {"down", e.down}});
    return {{"n", g.size()}, {"edges", edges}, {"coords", "tri"}, {"points", points_to_json(g.points)}};
}

inline std::vector<Edge> edges_from_json(const json& doc) {
    std::vector<Edge> out;
    for (const auto& e : doc.at("edges")) out.push_back({e.at("u").get<int>(), e.at("v").get<int>(), e.value("up", false), e.value("down", false)});
    return out;
}

inline json matching_to_json(const Matching& m) {
    json edges = json::array();
    for (const auto& [u, v] : m.edges) edges.push_back({u, v});
    return edges;
}

inline json tutte_to_json(const TutteBergeWitness& w) {
    return {{"S", w.S}, {"odd_components", w.odd_components}, {"comp", w.comp}, {"deficiency", w.deficiency}};
}

// ---------------------------------------------------------------- SVG

struct RenderOptions {
    bool triangles = false;                       // shade every introducing triangle
    std::vector<std::pair<int, int>> matching;    // drawn thick
    std::vector<Point> blockers;                  // drawn as crosses
    std::vector<IntroTriangle> family;            // translucent fills
    double size = 640;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace detail

/// Deterministic SVG: up-edges solid, down-edges dashed, edges in both
/// graphs thick.
inline std::string render_svg(const ProximityGraph& g, const RenderOptions& opt = {}) {
    std::vector<std::array<double, 2>> xy;
    for (const auto& p : g.points) xy.push_back(cartesian(p));
    for (const auto& b : opt.blockers) xy.push_back(cartesian(b));
    double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
    if (!xy.empty()) {
        lo_x = hi_x = xy[0][0];
        lo_y = hi_y = xy[0][1];
        for (const auto& c : xy) {
            lo_x = std::min(lo_x, c[0]);
            hi_x = std::max(hi_x, c[0]);
            lo_y = std::min(lo_y, c[1]);
            hi_y = std::max(hi_y, c[1]);
        }
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    const double margin = 20, inner = opt.size - 2 * margin;
    auto X = [&](double x) { return margin + (x - lo_x) / span * inner; };
    auto Y = [&](double y) { return opt.size - margin - (y - lo_y) / span * inner; };
    auto at = [&](const Point& p) {
        auto c = cartesian(p);
        return std::array<double, 2>{X(c[0]), Y(c[1])};
    };
    using detail::fmt;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opt.size) << "\" height=\"" << fmt(opt.size)
        << "\" viewBox=\"0 0 " << fmt(opt.size) << " " << fmt(opt.size) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(opt.size) << "\" height=\"" << fmt(opt.size)
        << "\" fill=\"white\" stroke=\"#999\"/>\n";
    auto polygon = [&](const Triangle& t, const char* fill) {
        out << "<polygon points=\"";
        for (const auto& c : t.corners()) {
            auto q = at(c);
            out << fmt(q[0]) << "," << fmt(q[1]) << " ";
        }
        out << "\" fill=\"" << fill << "\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    };
    if (opt.triangles)
        for (const Edge& e : g.edges) {
            if (e.up) polygon(g.introducing(e, Orientation::up), "#4a90d9");
            if (e.down) polygon(g.introducing(e, Orientation::down), "#d9904a");
        }
    for (const auto& t : opt.family) polygon(t.triangle, "#e5c100");
    auto segment = [&](int u, int v, const std::string& style) {
        auto a = at(g.points[static_cast<std::size_t>(u)]);
        auto b = at(g.points[static_cast<std::size_t>(v)]);
        out << "<line x1=\"" << fmt(a[0]) << "\" y1=\"" << fmt(a[1]) << "\" x2=\"" << fmt(b[0]) << "\" y2=\"" << fmt(b[1])
            << "\" " << style << "/>\n";
    };
    for (const Edge& e : g.edges) {
        if (e.up && e.down)
            segment(e.u, e.v, "stroke=\"black\" stroke-width=\"2.5\"");
        else if (e.up)
            segment(e.u, e.v, "stroke=\"black\" stroke-width=\"1\"");
        else
            segment(e.u, e.v, "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4,3\"");
    }
    for (const auto& [u, v] : opt.matching) segment(u, v, "stroke=\"#c0392b\" stroke-width=\"5\" stroke-opacity=\"0.7\"");
    for (const auto& p : g.points) {
        auto q = at(p);
        out << "<circle cx=\"" << fmt(q[0]) << "\" cy=\"" << fmt(q[1]) << "\" r=\"3.5\" fill=\"black\"/>\n";
    }
    for (const auto& b : opt.blockers) {
        auto q = at(b);
        out << "<path d=\"M" << fmt(q[0] - 4) << "," << fmt(q[1] - 4) << " L" << fmt(q[0] + 4) << "," << fmt(q[1] + 4) << " M"
            << fmt(q[0] - 4) << "," << fmt(q[1] + 4) << " L" << fmt(q[0] + 4) << "," << fmt(q[1] - 4)
            << "\" stroke=\"#2c7a2c\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace theta6
