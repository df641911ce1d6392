#pragma once

// Minimum spanning tree under triangular distance, and paths that stay
// inside the smallest triangle of their endpoints.

#include "theta6/graph.hpp"

#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace theta6 {

struct SpanningTree {
    std::vector<std::pair<int, int>> edges;  // u < v
    Scalar weight;                           // sum of squared triangle sizes (proportional to area)
};

/// Prim's algorithm on the complete graph with weight size(up-triangle(p, q)).
/// Ties, which general position does not exclude, break by vertex index.
inline SpanningTree mst_td(std::span<const Point> pts) {
    const int n = static_cast<int>(pts.size());
    SpanningTree tree{{}, Scalar(0)};
    if (n == 0) return tree;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<std::optional<Scalar>> key(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    key[0] = Scalar(0);
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (done[vi] || !key[vi]) continue;
            if (best < 0 || *key[vi] < *key[static_cast<std::size_t>(best)]) best = v;
        }
        auto bi = static_cast<std::size_t>(best);
        done[bi] = true;
        if (parent[bi] >= 0) {
            tree.edges.emplace_back(std::min(best, parent[bi]), std::max(best, parent[bi]));
            tree.weight += *key[bi] * *key[bi];
        }
        for (int v = 0; v < n; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (done[vi]) continue;
            Scalar w = smallest_triangle(pts[bi], pts[vi], Orientation::up).size();
            if (!key[vi] || w < *key[vi]) {
                key[vi] = w;
                parent[vi] = best;
            }
        }
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

class PathNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest path from p to q in the half-graph of orientation o using only
/// vertices inside the closed smallest triangle of p and q. Every returned
/// edge also has its introducing triangle inside that triangle; a missing
/// path is reported by PathNotFound.
inline std::vector<int> path_in_triangle(const ProximityGraph& g, int p, int q, Orientation o) {
    const auto& pts = g.points;
    Triangle outer = smallest_triangle(pts[static_cast<std::size_t>(p)], pts[static_cast<std::size_t>(q)], o);
    const int n = g.size();
    std::vector<bool> allowed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) allowed[static_cast<std::size_t>(v)] = contains(outer, pts[static_cast<std::size_t>(v)], Mode::closed);
    Graph h = g.graph(o);
    std::vector<int> from(static_cast<std::size_t>(n), -2);
    std::queue<int> queue;
    from[static_cast<std::size_t>(p)] = -1;
    queue.push(p);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        if (v == q) break;
        for (int w : h.neighbors(v)) {
            auto wi = static_cast<std::size_t>(w);
            if (!allowed[wi] || from[wi] != -2) continue;
            from[wi] = v;
            queue.push(w);
        }
    }
    if (from[static_cast<std::size_t>(q)] == -2)
        throw PathNotFound("no " + std::string(name(o)) + "-path inside the triangle of " + std::to_string(p) + " and " +
                           std::to_string(q));
    std::vector<int> path;
    for (int v = q; v != -1; v = from[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Triangle t = smallest_triangle(pts[static_cast<std::size_t>(path[i])], pts[static_cast<std::size_t>(path[i + 1])], o);
        if (!triangle_inside(t, outer))
            throw PathNotFound("introducing triangle of (" + std::to_string(path[i]) + "," + std::to_string(path[i + 1]) +
                               ") leaves the triangle of " + std::to_string(p) + " and " + std::to_string(q));
    }
    return path;
}

}  // namespace theta6
