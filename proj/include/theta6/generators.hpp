#pragma once

// Deterministic point-set generators. Every generator validates the property
// it exists for before returning and records what it checked.
//
// The small hardcoded configurations were found with tools/find_configs.cpp.

#include "theta6/blocking.hpp"
#include "theta6/coloring.hpp"
#include "theta6/faces.hpp"
#include "theta6/matching.hpp"
#include "theta6/triangles.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace theta6 {

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Provenance {
    std::string generator;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, std::string>> checks;  // name -> observed value; all passed

    void param(std::string k, std::string v) { parameters.emplace_back(std::move(k), std::move(v)); }
    void check(std::string k, std::string v) { checks.emplace_back(std::move(k), std::move(v)); }
};

struct Instance {
    std::vector<Point> points;
    Provenance provenance;
    std::vector<bool> subset;       // fig3: the set S
    TriangleFamily family;          // gadgets: the certified family
};

namespace detail {

inline void expect(bool ok, const std::string& what) {
    if (!ok) throw GenerationError("generator validation failed: " + what);
}

inline std::vector<Point> lattice(std::initializer_list<std::array<long, 2>> coords) {
    std::vector<Point> out;
    for (const auto& c : coords) out.emplace_back(Scalar(c[0]), Scalar(c[1]));
    return out;
}

inline Point shifted(const Point& p, const Scalar& d0, const Scalar& d1) { return Point(p[0] + d0, p[1] + d1); }

inline std::vector<Point> stack_clusters(const std::vector<Point>& cluster, int copies, long spacing) {
    std::vector<Point> out;
    for (int k = 0; k < copies; ++k)
        for (const auto& p : cluster) out.push_back(shifted(p, Scalar(k * spacing), Scalar(k * spacing)));
    return out;
}

// Cluster i+1 in cone C1 of every point of cluster i; triangles between
// clusters only join consecutive ones.
inline void validate_stacking(const std::vector<Point>& pts, int size, Provenance& prov) {
    const int n = static_cast<int>(pts.size());
    for (int u = 0; u + size < n; ++u)
        for (int v = (u / size + 1) * size; v < (u / size + 2) * size; ++v)
            expect(cone_index(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)]) == 1,
                   "cluster stacked in cone C1");
    int between = 0;
    for (const auto& t : introducing_triangles(pts)) {
        int cu = t.u / size, cv = t.v / size;
        if (cu == cv) continue;
        expect(cv - cu == 1, "between-cluster triangles join consecutive clusters only");
        ++between;
    }
    prov.check("stacked in cone C1", "true");
    prov.check("between-cluster triangles", std::to_string(between) + ", all consecutive");
}

inline int family_size(std::span<const Point> pts, Mode mode) {
    return static_cast<int>(max_disjoint_triangles(pts, mode, Solver::exact).triangles.size());
}

// Symmetry of the cone frame: rotation by 60k degrees, then optional reflection.
inline Point frame_symmetry(const Point& p, int k, bool reflect) {
    std::array<Scalar, 3> l{p[0], p[1], p[2]};
    if (reflect) std::swap(l[1], l[2]);
    for (int i = 0; i < k; ++i) l = {-l[2], -l[0], -l[1]};
    return Point(l[0], l[1]);
}

}  // namespace detail

/// n points on a vertical line, one unit apart.
inline Instance gen_vertical_line(int n) {
    if (n < 1) throw std::invalid_argument("vertical line needs n >= 1");
    Instance out;
    for (int k = 0; k < n; ++k) out.points.emplace_back(Scalar(2 * k), Scalar(-k));
    out.provenance.generator = "vertical";
    out.provenance.param("n", std::to_string(n));
    detail::expect(!general_position(out.points), "general position");
    auto g = build_fast(out.points);
    detail::expect(g.edges.size() == static_cast<std::size_t>(n - 1), "path with n - 1 edges");
    out.provenance.check("edges", std::to_string(g.edges.size()));
    return out;
}

/// n points uniform in the unit square. Cartesian coordinates are drawn from
/// mt19937_64 (two 64-bit outputs per point, high 32 bits kept, i.e. a 2^-32
/// grid) and converted with one `precision`-digit approximation of sqrt(3).
/// Draws that collide with an earlier point in some coordinate are redrawn.
inline Instance gen_uniform(int n, std::uint64_t seed, unsigned precision = 30) {
    if (n < 1) throw std::invalid_argument("uniform needs n >= 1");
    Instance out;
    std::mt19937_64 rng(seed);
    const Scalar sqrt3 = sqrt3_approx(precision);
    const Scalar unit(1, 1);
    const mpz_class denom = mpz_class(1) << 32;
    std::array<std::set<Scalar>, 3> seen;
    int redraws = 0;
    while (static_cast<int>(out.points.size()) < n) {
        Scalar x(mpz_class(static_cast<unsigned long>(rng() >> 32)), denom);
        Scalar y(mpz_class(static_cast<unsigned long>(rng() >> 32)), denom);
        x.canonicalize();
        y.canonicalize();
        Point p = from_cartesian(x, y, sqrt3);
        if (seen[0].count(p[0]) || seen[1].count(p[1]) || seen[2].count(p[2])) {
            ++redraws;
            continue;
        }
        for (std::size_t c = 0; c < 3; ++c) seen[c].insert(p[c]);
        out.points.push_back(std::move(p));
    }
    out.provenance.generator = "uniform";
    out.provenance.param("n", std::to_string(n));
    out.provenance.param("seed", std::to_string(seed));
    out.provenance.param("precision", std::to_string(precision));
    out.provenance.param("prng", "mt19937_64");
    detail::expect(!general_position(out.points), "general position");
    out.provenance.check("general position", "true");
    out.provenance.check("redraws", std::to_string(redraws));
    return out;
}

/// Cluster R: 4 points, 5 edges, 8 introducing triangles, at most 3 of them
/// interior-disjoint.
inline std::vector<Point> cluster_r() { return detail::lattice({{20, 14}, {14, 18}, {6, 25}, {12, 23}}); }
inline constexpr long kClusterRSpacing = 1000;

/// Cluster S: 5 points whose strong matchings have at most 2 edges, also
/// when a between-cluster triangle is present.
inline std::vector<Point> cluster_s() { return detail::lattice({{175, -33}, {82, 63}, {115, 81}, {36, 46}, {-31, 181}}); }
inline constexpr long kClusterSSpacing = 5000;

/// Exact solvers are run on at most this many clusters during validation.
inline constexpr int kExactClusterCheck = 3;

/// t copies of cluster R stacked in cone C1; alpha = 3n/4.
inline Instance gen_alpha_clusters(int t) {
    if (t < 1) throw std::invalid_argument("alpha clusters need t >= 1");
    Instance out;
    out.provenance.generator = "alpha-clusters";
    out.provenance.param("t", std::to_string(t));
    out.provenance.param("spacing", std::to_string(kClusterRSpacing));
    auto r = cluster_r();
    auto g = build_fast(r);
    int both = 0;
    for (const Edge& e : g.edges) both += e.up && e.down;
    detail::expect(g.edges.size() == 5 && both == 3, "cluster R has 5 edges, 3 of them with both triangles");
    detail::expect(introducing_triangles(g).size() == 8, "cluster R has 8 introducing triangles");
    detail::expect(detail::family_size(r, Mode::open) == 3, "alpha(R) = 3");
    out.provenance.check("cluster edges", "5 (3 with both triangles)");
    out.provenance.check("cluster triangles", "8");
    out.provenance.check("alpha(R)", "3");
    out.points = detail::stack_clusters(r, t, kClusterRSpacing);
    detail::expect(!general_position(out.points), "general position");
    detail::validate_stacking(out.points, 4, out.provenance);
    if (t <= kExactClusterCheck) {
        int a = detail::family_size(out.points, Mode::open);
        detail::expect(a == 3 * t, "alpha = 3n/4");
        out.provenance.check("alpha", std::to_string(a));
    }
    return out;
}

/// t copies of cluster S stacked in cone C1; mu* = 2n/5.
inline Instance gen_strong_clusters(int t) {
    if (t < 1) throw std::invalid_argument("strong clusters need t >= 1");
    Instance out;
    out.provenance.generator = "strong-clusters";
    out.provenance.param("t", std::to_string(t));
    out.provenance.param("spacing", std::to_string(kClusterSSpacing));
    auto s = cluster_s();
    detail::expect(detail::family_size(s, Mode::closed) == 2, "mu*(S) = 2");
    out.provenance.check("mu*(S)", "2");
    // With a triangle entering from the cluster below, the remaining cluster
    // triangles disjoint from it pairwise intersect.
    {
        auto two = detail::stack_clusters(s, 2, kClusterSSpacing);
        auto tris = introducing_triangles(two);
        int big = 0;
        for (const auto& t2 : tris) {
            if (!(t2.u < 5 && t2.v >= 5 && t2.triangle.orientation == Orientation::up)) continue;
            ++big;
            std::vector<Triangle> rest;
            for (const auto& x : tris)
                if (x.u >= 5 && x.v >= 5 && disjoint_closed(x.triangle, t2.triangle)) rest.push_back(x.triangle);
            for (std::size_t i = 0; i < rest.size(); ++i)
                for (std::size_t j = i + 1; j < rest.size(); ++j)
                    detail::expect(!disjoint_closed(rest[i], rest[j]), "cluster triangles beside a between-cluster triangle intersect");
        }
        detail::expect(big > 0, "a between-cluster up-triangle exists");
        out.provenance.check("between-cluster blocking", "true");
    }
    out.points = detail::stack_clusters(s, t, kClusterSSpacing);
    detail::expect(!general_position(out.points), "general position");
    detail::validate_stacking(out.points, 5, out.provenance);
    if (t <= kExactClusterCheck) {
        int m = detail::family_size(out.points, Mode::closed);
        detail::expect(m == 2 * t, "mu* = 2n/5");
        out.provenance.check("mu*", std::to_string(m));
    }
    return out;
}

/// A base pair followed by t gadgets of four points, with a certified family
/// of 5t + 1 = (5n - 6)/4 pairwise interior-disjoint empty triangles.
inline Instance gen_blocking_gadgets(int t) {
    if (t < 0) throw std::invalid_argument("gadget count must be >= 0");
    static const std::array<std::array<long, 2>, 2> base{{{-14, 31}, {34, -23}}};
    static const std::array<std::array<long, 2>, 2> middle{{{32, -10}, {8, -24}}};
    static const std::array<long, 2> step{7, -33};
    Instance out;
    out.provenance.generator = "blocking-gadgets";
    out.provenance.param("t", std::to_string(t));
    auto at = [](const std::array<long, 2>& c, long k) { return Point(Scalar(c[0] + k * step[0]), Scalar(c[1] + k * step[1])); };
    for (const auto& c : base) out.points.push_back(at(c, 0));
    for (int k = 1; k <= t; ++k) {
        for (const auto& c : middle) out.points.push_back(at(c, k - 1));
        for (const auto& c : base) out.points.push_back(at(c, k));
    }
    detail::expect(!general_position(out.points), "general position");

    struct Tri {
        int u, v;
        Orientation o;
    };
    constexpr auto U = Orientation::up;
    constexpr auto D = Orientation::down;
    std::vector<Tri> pick;
    if (t == 0) {
        pick.push_back({0, 1, U});
    } else {
        const std::array<Tri, 3> bottom{{{0, 2, D}, {0, 4, U}, {1, 2, U}}};
        const std::array<Tri, 5> repeat{{{1, 3, D}, {1, 6, U}, {3, 8, U}, {4, 8, D}, {5, 6, U}}};
        const std::array<Tri, 3> top{{{1, 5, D}, {3, 4, D}, {3, 5, U}}};
        pick.insert(pick.end(), bottom.begin(), bottom.end());
        for (int k = 0; k + 1 < t; ++k)
            for (const auto& x : repeat) pick.push_back({x.u + 4 * k, x.v + 4 * k, x.o});
        for (const auto& x : top) pick.push_back({x.u + 4 * (t - 1), x.v + 4 * (t - 1), x.o});
    }
    out.family.disjointness = Mode::open;
    for (const auto& x : pick)
        out.family.triangles.push_back(
            {smallest_triangle(out.points[static_cast<std::size_t>(x.u)], out.points[static_cast<std::size_t>(x.v)], x.o), x.u, x.v});
    const int n = static_cast<int>(out.points.size());
    detail::expect(4 * static_cast<int>(out.family.triangles.size()) == 5 * n - 6, "family size (5n - 6)/4");
    detail::expect(valid_family(out.points, out.family), "family is empty and pairwise interior-disjoint");
    out.provenance.check("family size", std::to_string(out.family.triangles.size()));
    out.provenance.check("family valid", "true");
    return out;
}

/// n - 6 points on a vertical segment and six surrounding points forming an
/// octahedron: 5n - 17 edges.
inline Instance gen_many_edges(int n) {
    if (n < 7) throw std::invalid_argument("many-edges needs n >= 7");
    const int m = n - 6;
    Instance out;
    out.provenance.generator = "many-edges";
    out.provenance.param("n", std::to_string(n));
    for (int k = 0; k < m; ++k) {
        Scalar h(k, m);
        h.canonicalize();
        out.points.emplace_back(Scalar(2 * h), Scalar(-h));
    }
    auto surround = detail::lattice({{21, 13}, {14, -13}, {2, -11}, {-39, -36}, {-12, 7}, {-2, 4}});
    out.points.insert(out.points.end(), surround.begin(), surround.end());
    detail::expect(!general_position(out.points), "general position");
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < 6; ++i)
            detail::expect(cone_index(out.points[static_cast<std::size_t>(k)], out.points[static_cast<std::size_t>(m + i)]) == i + 1,
                           "a_i in cone C_i");
    auto g = build_fast(out.points);
    int line = 0, among = 0;
    std::array<int, 6> to_line{};
    for (const Edge& e : g.edges) {
        if (e.v < m)
            ++line;
        else if (e.u < m)
            ++to_line[static_cast<std::size_t>(e.v - m)];
        else
            ++among;
    }
    detail::expect(line == m - 1, "n - 7 edges on the line");
    for (int i : {0, 2, 3, 5}) detail::expect(to_line[static_cast<std::size_t>(i)] == m, "a1, a3, a4, a6 see every line point");
    detail::expect(to_line[1] == 1 && to_line[4] == 1, "a2 and a5 have one line edge each");
    detail::expect(among == 12, "octahedron on the surround");
    detail::expect(static_cast<int>(g.edges.size()) == 5 * n - 17, "5n - 17 edges");
    out.provenance.check("edges", std::to_string(g.edges.size()));
    out.provenance.check("census", std::to_string(line) + " + " + std::to_string(4 * m) + " + 12 + 2");
    return out;
}

/// 13-point half with all but two vertices (a, b) of degree >= 7.
inline std::vector<Point> min_degree_half() {
    return detail::lattice({{-9, -41}, {-19, -75}, {35, -155}, {-57, -43}, {-166, -191}, {-30, 32}, {4, 36},
                            {-13, -25}, {-382, 231}, {233, 162}, {113, -45}, {27, 22}, {-95, 181}});
}

/// Two halves, the second rotated by 180 degrees, reflected and shifted so
/// that a, b become adjacent to their copies: 26 points, minimum degree 7.
inline Instance gen_min_degree7() {
    Instance out;
    out.provenance.generator = "min-degree7";
    auto half = min_degree_half();
    auto hg = build_fast(half).graph();
    std::vector<int> low;
    for (int v = 0; v < hg.size(); ++v)
        if (hg.neighbors(v).size() < 7) low.push_back(v);
    detail::expect(low.size() == 2, "all but two vertices of a half have degree >= 7");
    out.provenance.check("half low-degree vertices", std::to_string(low[0]) + ", " + std::to_string(low[1]));
    out.points = half;
    for (const auto& p : half) out.points.push_back(detail::shifted(detail::frame_symmetry(p, 3, true), Scalar(1032), Scalar(-52)));
    detail::expect(!general_position(out.points), "general position");
    auto g = build_fast(out.points);
    for (int v : low) detail::expect(g.has_edge(v, v + 13), "low-degree vertex adjacent to its copy");
    int md = min_degree(g.graph());
    detail::expect(out.points.size() == 26 && md == 7, "26 points with minimum degree 7");
    out.provenance.check("n", "26");
    out.provenance.check("min degree", std::to_string(md));
    return out;
}

/// Six points with a perfect matching that need five blockers.
inline Instance gen_fig1() {
    Instance out;
    out.provenance.generator = "fig1";
    out.points = detail::lattice({{20, 22}, {2, 20}, {28, 35}, {19, 11}, {30, 2}, {24, 23}});
    detail::expect(!general_position(out.points), "general position");
    auto mu = max_matching(build_fast(out.points).graph()).size();
    auto beta = min_blocking_set(out.points, Solver::exact).size();
    detail::expect(mu == 3 && beta == 5, "mu = 3 and beta = 5");
    out.provenance.check("mu", std::to_string(mu));
    out.provenance.check("beta", std::to_string(beta));
    return out;
}

/// Seven points and a six-point subset S; the free point lies in a face of
/// degree 3 of the down-graph on S and of degree 4 of the up-graph.
inline Instance gen_fig3() {
    Instance out;
    out.provenance.generator = "fig3";
    out.points = detail::lattice({{31, 36}, {20, 29}, {4, 4}, {26, 17}, {10, 20}, {39, 26}, {34, 6}});
    out.subset.assign(7, true);
    out.subset[6] = false;
    detail::expect(!general_position(out.points), "general position");
    auto down = induced_face_profile(out.points, out.subset, Orientation::down);
    auto up = induced_face_profile(out.points, out.subset, Orientation::up);
    detail::expect(down.representative_degree == std::vector<int>{3} && up.representative_degree == std::vector<int>{4},
                   "face degrees 3 (down) and 4 (up)");
    detail::expect(down.f3 == 1 && up.f5plus == 0, "f3(down) = 1 and f5+(up) = 0");
    out.provenance.check("face degree down", "3");
    out.provenance.check("face degree up", "4");
    return out;
}

}  // namespace theta6
