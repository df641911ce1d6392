#pragma once

// One-stop summary of the matching and blocking parameters of a point set,
// exact where the solvers allow and bracketed otherwise.

#include "theta6/blocking.hpp"
#include "theta6/coloring.hpp"
#include "theta6/matching.hpp"
#include "theta6/triangles.hpp"

#include <algorithm>
#include <span>
#include <string>

namespace theta6 {

struct Estimate {
    int lower = 0;
    int upper = 0;

    bool exact() const { return lower == upper; }
    std::string tag() const { return exact() ? "exact" : "bounds"; }
};

struct BoundReport {
    int n = 0;
    int edges = 0;
    int up_edges = 0;
    int down_edges = 0;
    int triangles = 0;  // introducing triangles
    int min_degree = 0;
    int degeneracy = 0;
    int colors = 0;
    int independent = 0;
    int matching = 0;    // mu, always exact
    int deficiency = 0;  // n - 2 mu
    Estimate blocking;   // beta
    Estimate alpha;
    Estimate strong;     // mu*
};

struct BoundLimits {
    std::size_t exact_blocking = kMaxExactBlocking;
    std::size_t exact_family = kMaxExactFamily;
};

inline BoundReport bound_report(std::span<const Point> pts, BoundLimits limits = {}) {
    BoundReport r;
    r.n = static_cast<int>(pts.size());
    if (pts.empty()) return r;
    auto g = build_fast(pts);
    Graph graph = g.graph();
    r.edges = static_cast<int>(g.edges.size());
    r.up_edges = static_cast<int>(g.count(Orientation::up));
    r.down_edges = static_cast<int>(g.count(Orientation::down));
    r.min_degree = min_degree(graph);
    r.degeneracy = degeneracy_order(graph).value;
    r.colors = color_count(greedy_color(graph));
    r.independent = static_cast<int>(greedy_independent(graph).size());
    r.matching = static_cast<int>(max_matching(graph).size());
    r.deficiency = r.n - 2 * r.matching;

    auto tris = introducing_triangles(g);
    r.triangles = static_cast<int>(tris.size());
    auto family = [&](Mode mode) {
        Solver s = tris.size() <= limits.exact_family ? Solver::exact : Solver::greedy;
        int v = static_cast<int>(max_disjoint_triangles(tris, mode, s).triangles.size());
        return s == Solver::exact ? Estimate{v, v} : Estimate{v, r.triangles};
    };
    r.alpha = family(Mode::open);
    r.strong = family(Mode::closed);
    r.strong.upper = std::min({r.strong.upper, r.matching, r.alpha.upper});

    if (tris.size() <= limits.exact_blocking) {
        int b = static_cast<int>(min_blocking_set(pts, Solver::exact).size());
        r.blocking = {b, b};
    } else {
        int b = static_cast<int>(min_blocking_set(pts, Solver::greedy).size());
        r.blocking = {std::max(r.alpha.lower, r.n / 2), std::min(b, 2 * (r.n - 1))};
    }
    r.alpha.upper = std::min(r.alpha.upper, r.blocking.upper);
    return r;
}

}  // namespace theta6
