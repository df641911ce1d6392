#pragma once

// Faces of plane straight-line graphs.
//
// Faces are traced with the rotation system (neighbors sorted by angle); a
// face lies to the left of each of its half-edges. Each connected component
// contributes one outer walk, and components nest inside bounded faces of
// other components as holes. Isolated vertices are holes of length zero.
//
// The degree of a face is the number of triangles in a triangulation of the
// face plus two. For a face with total boundary-walk length k and h holes it
// is k + 2h; face_degree() obtains the same number from an explicit
// constrained triangulation.

#include "theta6/augment.hpp"
#include "theta6/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace theta6 {

class CrossingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PlaneGraph {
    std::vector<Vec2> pos;
    Graph graph;
    std::vector<int> original;  // vertex id in the source point set
};

/// Plane graph on the vertices selected by `keep`, using edges of `g`.
inline PlaneGraph plane_graph(std::span<const Point> pts, const Graph& g, const std::vector<bool>& keep) {
    PlaneGraph pg;
    pg.graph = induced(g, keep, &pg.original);
    for (int v : pg.original) pg.pos.push_back(planar(pts[static_cast<std::size_t>(v)]));
    return pg;
}

inline PlaneGraph plane_graph(std::span<const Point> pts, const Graph& g) {
    return plane_graph(pts, g, std::vector<bool>(pts.size(), true));
}

struct Face {
    std::vector<std::vector<int>> walks;  // bounded faces: walks[0] is the outer boundary
    int holes = 0;                        // boundary components beyond the first, isolated vertices excluded
    int isolated = 0;
    bool is_outer = false;
    int degree = 0;  // k + 2h
    std::vector<int> isolated_vertices;
};

struct FaceReport {
    std::vector<Face> faces;
    int outer = 0;
    int components = 0;

    /// Face containing p, which must not lie on a vertex or edge.
    int locate(const Vec2& p) const;

    // Bounded walks with their faces, for point location.
    std::vector<Vec2> pos;
    struct BoundedWalk {
        std::vector<int> walk;
        Scalar area2;
        int face;
    };
    std::vector<BoundedWalk> bounded;
};

namespace detail {

inline bool in_walk(const std::vector<Vec2>& pos, const std::vector<int>& walk, const Vec2& p) {
    bool inside = false;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Vec2& a = pos[static_cast<std::size_t>(walk[i])];
        const Vec2& b = pos[static_cast<std::size_t>(walk[(i + 1) % walk.size()])];
        if ((a.v > p.v) != (b.v > p.v)) {
            // u-coordinate of the crossing compared with p.u, sign-adjusted by direction.
            Scalar lhs = (p.u - a.u) * (b.v - a.v);
            Scalar rhs = (b.u - a.u) * (p.v - a.v);
            bool right = b.v > a.v ? lhs < rhs : lhs > rhs;
            if (right) inside = !inside;
        }
    }
    return inside;
}

inline Scalar walk_area2(const std::vector<Vec2>& pos, const std::vector<int>& walk) {
    Scalar s = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Vec2& a = pos[static_cast<std::size_t>(walk[i])];
        const Vec2& b = pos[static_cast<std::size_t>(walk[(i + 1) % walk.size()])];
        s += a.u * b.v - a.v * b.u;
    }
    return s;
}

inline int half(const Vec2& d) { return (d.v > 0 || (d.v == 0 && d.u > 0)) ? 0 : 1; }

inline void check_plane(const PlaneGraph& pg) {
    const auto& g = pg.graph;
    std::vector<std::pair<int, int>> segs;
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) segs.emplace_back(v, w);
    auto P = [&](int v) -> const Vec2& { return pg.pos[static_cast<std::size_t>(v)]; };
    for (std::size_t i = 0; i < segs.size(); ++i) {
        auto [a, b] = segs[i];
        for (int v = 0; v < g.size(); ++v)
            if (v != a && v != b && on_segment(P(a), P(b), P(v)))
                throw CrossingError("vertex " + std::to_string(pg.original[static_cast<std::size_t>(v)]) +
                                    " lies on an edge");
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            auto [c, d] = segs[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_intersect(P(a), P(b), P(c), P(d)))
                throw CrossingError("edges (" + std::to_string(pg.original[static_cast<std::size_t>(a)]) + "," +
                                    std::to_string(pg.original[static_cast<std::size_t>(b)]) + ") and (" +
                                    std::to_string(pg.original[static_cast<std::size_t>(c)]) + "," +
                                    std::to_string(pg.original[static_cast<std::size_t>(d)]) + ") cross");
        }
    }
}

}  // namespace detail

inline int FaceReport::locate(const Vec2& p) const {
    const BoundedWalk* best = nullptr;
    for (const auto& bw : bounded)
        if (detail::in_walk(pos, bw.walk, p) && (!best || bw.area2 < best->area2)) best = &bw;
    return best ? best->face : outer;
}

/// Faces of a plane straight-line graph. Throws CrossingError if two edges
/// cross or a vertex lies on an edge.
inline FaceReport faces(const PlaneGraph& pg) {
    detail::check_plane(pg);
    const auto& g = pg.graph;
    const int n = g.size();
    auto P = [&](int v) -> const Vec2& { return pg.pos[static_cast<std::size_t>(v)]; };

    // Rotation system: neighbors counterclockwise by direction.
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& r = rot[static_cast<std::size_t>(v)];
        r = g.neighbors(v);
        std::sort(r.begin(), r.end(), [&](int a, int b) {
            Vec2 da{P(a).u - P(v).u, P(a).v - P(v).v}, db{P(b).u - P(v).u, P(b).v - P(v).v};
            int ha = detail::half(da), hb = detail::half(db);
            if (ha != hb) return ha < hb;
            return sgn(Scalar(da.u * db.v - da.v * db.u)) > 0;
        });
    }
    auto position = [&](int v, int w) {
        const auto& r = rot[static_cast<std::size_t>(v)];
        return static_cast<std::size_t>(std::find(r.begin(), r.end(), w) - r.begin());
    };

    // Trace walks; the face is on the left of u->v, the next half-edge leaves v
    // toward the neighbor preceding u counterclockwise.
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> walks;
    for (int u = 0; u < n; ++u)
        for (int v : rot[static_cast<std::size_t>(u)]) {
            if (seen.count({u, v})) continue;
            std::vector<int> walk;
            int a = u, b = v;
            while (!seen.count({a, b})) {
                seen.insert({a, b});
                walk.push_back(a);
                const auto& r = rot[static_cast<std::size_t>(b)];
                std::size_t k = position(b, a);
                int c = r[(k + r.size() - 1) % r.size()];
                a = b;
                b = c;
            }
            walks.push_back(std::move(walk));
        }

    std::vector<int> comp;
    FaceReport rep;
    rep.pos = pg.pos;
    rep.components = component_labels(g, comp);

    std::vector<Scalar> area(walks.size());
    for (std::size_t i = 0; i < walks.size(); ++i) area[i] = detail::walk_area2(pg.pos, walks[i]);

    // Outer walk per component: the one of least signed area (negative or zero).
    std::vector<int> outer_walk(static_cast<std::size_t>(rep.components), -1);
    for (std::size_t i = 0; i < walks.size(); ++i) {
        int c = comp[static_cast<std::size_t>(walks[i][0])];
        int& o = outer_walk[static_cast<std::size_t>(c)];
        if (o < 0 || area[i] < area[static_cast<std::size_t>(o)]) o = static_cast<int>(i);
    }

    for (std::size_t i = 0; i < walks.size(); ++i) {
        int c = comp[static_cast<std::size_t>(walks[i][0])];
        if (outer_walk[static_cast<std::size_t>(c)] == static_cast<int>(i)) continue;
        Face f;
        f.walks.push_back(walks[i]);
        rep.bounded.push_back({walks[i], area[i], static_cast<int>(rep.faces.size())});
        rep.faces.push_back(std::move(f));
    }
    rep.outer = static_cast<int>(rep.faces.size());
    Face outer;
    outer.is_outer = true;
    rep.faces.push_back(outer);

    // Nest each component in the innermost bounded walk of another component.
    std::vector<int> first_vertex(static_cast<std::size_t>(rep.components), -1);
    for (int v = 0; v < n; ++v)
        if (first_vertex[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] < 0)
            first_vertex[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = v;
    std::vector<int> outer_components(rep.faces.size(), 0);
    for (int c = 0; c < rep.components; ++c) {
        int v = first_vertex[static_cast<std::size_t>(c)];
        const FaceReport::BoundedWalk* best = nullptr;
        for (const auto& bw : rep.bounded)
            if (comp[static_cast<std::size_t>(bw.walk[0])] != c && detail::in_walk(pg.pos, bw.walk, P(v)) &&
                (!best || bw.area2 < best->area2))
                best = &bw;
        int f = best ? best->face : rep.outer;
        Face& face = rep.faces[static_cast<std::size_t>(f)];
        ++outer_components[static_cast<std::size_t>(f)];
        int ow = outer_walk[static_cast<std::size_t>(c)];
        if (ow < 0) {
            ++face.isolated;
            face.isolated_vertices.push_back(v);
        } else {
            face.walks.push_back(walks[static_cast<std::size_t>(ow)]);
            ++face.holes;
        }
    }
    for (std::size_t f = 0; f < rep.faces.size(); ++f) {
        Face& face = rep.faces[f];
        int k = 0;
        for (const auto& w : face.walks) k += static_cast<int>(w.size());
        if (face.is_outer) {
            // The first component on the boundary is not a hole.
            if (face.holes > 0)
                --face.holes;
            else if (face.isolated > 0)
                --face.isolated;
            int boundary = outer_components[f];
            face.degree = boundary == 0 ? 0 : k + 2 * (boundary - 1);
        } else {
            face.degree = k + 2 * (face.holes + face.isolated);
        }
    }
    return rep;
}

namespace detail {

// Maximal set of non-crossing diagonals inside a region, then the number of
// triangular cells it creates. `in_region` decides membership of points off
// all segments.
inline int triangulate_count(const std::vector<Vec2>& pts, std::vector<std::pair<int, int>> segs,
                             const std::function<bool(const Vec2&)>& in_region) {
    const int n = static_cast<int>(pts.size());
    auto P = [&](int v) -> const Vec2& { return pts[static_cast<std::size_t>(v)]; };
    std::set<std::pair<int, int>> present;
    for (auto& [a, b] : segs) {
        if (a > b) std::swap(a, b);
        present.insert({a, b});
    }
    segs.assign(present.begin(), present.end());
    auto mid = [&](int a, int b, int c = -1) {
        if (c < 0) return Vec2{Scalar((P(a).u + P(b).u) / 2), Scalar((P(a).v + P(b).v) / 2)};
        return Vec2{Scalar((P(a).u + P(b).u + P(c).u) / 3), Scalar((P(a).v + P(b).v + P(c).v) / 3)};
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (present.count({a, b})) continue;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                if (v != a && v != b && on_segment(P(a), P(b), P(v))) ok = false;
            for (std::size_t s = 0; s < segs.size() && ok; ++s) {
                auto [c, d] = segs[s];
                if (c == a || c == b || d == a || d == b) continue;
                if (segments_intersect(P(a), P(b), P(c), P(d))) ok = false;
            }
            if (!ok || !in_region(mid(a, b))) continue;
            present.insert({a, b});
            segs.emplace_back(a, b);
        }
    int count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!present.count({a, b})) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!present.count({a, c}) || !present.count({b, c})) continue;
                int o = orient(P(a), P(b), P(c));
                if (o == 0) continue;
                bool empty = true;
                for (int v = 0; v < n && empty; ++v) {
                    if (v == a || v == b || v == c) continue;
                    if (orient(P(a), P(b), P(v)) == o && orient(P(b), P(c), P(v)) == o &&
                        orient(P(c), P(a), P(v)) == o)
                        empty = false;
                }
                if (empty && in_region(mid(a, b, c))) ++count;
            }
        }
    return count;
}

}  // namespace detail

/// Degree of face `f` from an explicit constrained triangulation of the face
/// (holes and isolated vertices as constraints). The unbounded face is
/// closed off by a large triangle whose three extra cells are discounted.
inline int face_degree(const FaceReport& report, int f) {
    const Face& face = report.faces[static_cast<std::size_t>(f)];
    std::map<int, int> local;
    std::vector<Vec2> pts;
    auto id = [&](int v) {
        auto [it, inserted] = local.emplace(v, static_cast<int>(pts.size()));
        if (inserted) pts.push_back(report.pos[static_cast<std::size_t>(v)]);
        return it->second;
    };
    std::vector<std::pair<int, int>> segs;
    for (const auto& w : face.walks)
        for (std::size_t i = 0; i < w.size(); ++i) {
            int a = id(w[i]), b = id(w[(i + 1) % w.size()]);
            if (a != b) segs.emplace_back(a, b);
        }
    for (int v : face.isolated_vertices) id(v);

    if (!face.is_outer) {
        int t = detail::triangulate_count(pts, segs, [&](const Vec2& p) { return report.locate(p) == f; });
        return t + 2;
    }
    if (pts.empty()) return 0;
    Scalar lo_u = pts[0].u, hi_u = pts[0].u, lo_v = pts[0].v, hi_v = pts[0].v;
    for (const auto& p : pts) {
        lo_u = std::min<Scalar>(lo_u, p.u);
        hi_u = std::max<Scalar>(hi_u, p.u);
        lo_v = std::min<Scalar>(lo_v, p.v);
        hi_v = std::max<Scalar>(hi_v, p.v);
    }
    Scalar r = (hi_u - lo_u) + (hi_v - lo_v) + 1;
    Scalar cu = (lo_u + hi_u) / 2, cv = (lo_v + hi_v) / 2;
    std::array<Vec2, 3> big{Vec2{Scalar(cu - 4 * r), Scalar(cv - 2 * r)}, Vec2{Scalar(cu + 4 * r), Scalar(cv - 2 * r)},
                            Vec2{cu, Scalar(cv + 4 * r)}};
    int base = static_cast<int>(pts.size());
    for (const auto& b : big) pts.push_back(b);
    for (int i = 0; i < 3; ++i) segs.emplace_back(base + i, base + (i + 1) % 3);
    auto inside_big = [&](const Vec2& p) {
        return orient(big[0], big[1], p) > 0 && orient(big[1], big[2], p) > 0 && orient(big[2], big[0], p) > 0;
    };
    int t = detail::triangulate_count(pts, segs, [&](const Vec2& p) { return inside_big(p) && report.locate(p) == f; });
    return t - 3;
}

/// Counts for one orientation of the induced-face analysis of (P, S).
struct FaceProfile {
    Orientation orientation = Orientation::up;
    int components = 0;                      // comp(G(P) \ S)
    std::vector<int> representatives;        // lowest index per component
    std::vector<int> representative_degree;  // degree of the face holding each representative
    std::map<int, int> histogram;            // degree -> faces holding a representative
    int f3 = 0;
    int f4plus = 0;
    int f5plus = 0;
    int max_components_per_face = 0;
    int degree_sum = 0;   // sum of (d - 2) over all faces, outer hexagon split in four triangles
    int vertex_count = 0;  // |S| + 6
    int degree_mismatches = 0;  // faces where triangulation and k + 2h disagree
};

/// Locates the components of G(P) \ S in the faces of G_A[S u A] for the
/// given orientation, A the six surrounding points. The hexagon on A is the
/// outer face; its exterior counts as four triangles with no representative.
inline FaceProfile induced_face_profile(std::span<const Point> pts, const std::vector<bool>& in_s, Orientation o,
                                        bool triangulate = true) {
    const int n = static_cast<int>(pts.size());
    FaceProfile prof;
    prof.orientation = o;
    AugmentedSet aug = augment(pts);
    std::vector<Point> all = aug.combined();
    ProximityGraph full = build_fast(all);

    std::vector<bool> keep(all.size(), false);
    for (int v = 0; v < n; ++v) keep[static_cast<std::size_t>(v)] = in_s[static_cast<std::size_t>(v)];
    for (int i = 0; i < 6; ++i) keep[static_cast<std::size_t>(n + i)] = true;
    PlaneGraph pg = plane_graph(all, full.graph(o), keep);
    FaceReport report = faces(pg);
    prof.vertex_count = pg.graph.size();

    const Face& outer = report.faces[static_cast<std::size_t>(report.outer)];
    {
        bool hexagon = outer.walks.size() == 1 && outer.isolated == 0 && outer.walks[0].size() == 6;
        if (hexagon)
            for (int v : outer.walks[0])
                if (pg.original[static_cast<std::size_t>(v)] < n) hexagon = false;
        if (!hexagon) throw std::logic_error("outer face of the augmented graph is not the surround hexagon");
    }

    // Components of G(P) \ S; edges inside P are unaffected by the augmentation.
    Graph gp(n);
    for (const Edge& e : full.edges)
        if (e.u < n && e.v < n) gp.add_edge(e.u, e.v);
    std::vector<bool> removed(in_s.begin(), in_s.end());
    std::vector<int> label;
    prof.components = component_labels(gp, label, &removed);
    prof.representatives.assign(static_cast<std::size_t>(prof.components), -1);
    for (int v = 0; v < n; ++v) {
        int c = label[static_cast<std::size_t>(v)];
        if (c >= 0 && prof.representatives[static_cast<std::size_t>(c)] < 0)
            prof.representatives[static_cast<std::size_t>(c)] = v;
    }

    std::map<int, std::set<int>> components_in_face;
    for (int v = 0; v < n; ++v)
        if (!in_s[static_cast<std::size_t>(v)])
            components_in_face[report.locate(planar(all[static_cast<std::size_t>(v)]))].insert(label[static_cast<std::size_t>(v)]);
    for (const auto& [f, cs] : components_in_face)
        prof.max_components_per_face = std::max(prof.max_components_per_face, static_cast<int>(cs.size()));

    std::map<int, int> degree_of;
    auto degree = [&](int f) {
        auto it = degree_of.find(f);
        if (it != degree_of.end()) return it->second;
        int d = report.faces[static_cast<std::size_t>(f)].degree;
        if (triangulate && face_degree(report, f) != d) ++prof.degree_mismatches;
        degree_of[f] = d;
        return d;
    };
    std::set<int> holding;
    for (int r : prof.representatives) {
        int f = report.locate(planar(all[static_cast<std::size_t>(r)]));
        prof.representative_degree.push_back(degree(f));
        holding.insert(f);
    }
    for (int f : holding) {
        int d = report.faces[static_cast<std::size_t>(f)].degree;
        ++prof.histogram[d];
        if (d == 3) ++prof.f3;
        if (d >= 4) ++prof.f4plus;
        if (d >= 5) ++prof.f5plus;
    }
    for (std::size_t f = 0; f < report.faces.size(); ++f)
        prof.degree_sum += static_cast<int>(f) == report.outer ? 4 : report.faces[f].degree - 2;
    return prof;
}

}  // namespace theta6
