#pragma once

// Theta6-graphs and their two half-graphs (TD-Delaunay graphs).
//
// An edge (p, q) belongs to G^up when the smallest up-triangle with p and q
// on its boundary has no other point in its interior, and to G^down for the
// analogous down-triangle. Three constructions are provided:
//
//   build_half      nearest point per cone, O(n^2) per orientation
//   build_by_oracle empty-triangle test for every pair, O(n^3)
//   build_fast      per-cone dominance sweep over coordinate ranks, O(n log n)
//
// All three agree edge-for-edge, provenance included.

#include "theta6/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace theta6 {

struct Edge {
    int u = 0;
    int v = 0;
    bool up = false;
    bool down = false;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph as adjacency lists.
struct Graph {
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n) : adj(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(adj.size()); }

    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    std::size_t edge_count() const {
        std::size_t s = 0;
        for (const auto& a : adj) s += a.size();
        return s / 2;
    }

    const std::vector<int>& neighbors(int v) const { return adj[static_cast<std::size_t>(v)]; }
};

struct ProximityGraph {
    std::vector<Point> points;
    std::vector<Edge> edges;  // u < v, sorted, one entry per pair

    int size() const { return static_cast<int>(points.size()); }

    /// Edges of G^up, G^down, or their union.
    Graph graph() const {
        Graph g(size());
        for (const Edge& e : edges) g.add_edge(e.u, e.v);
        return g;
    }

    Graph graph(Orientation o) const {
        Graph g(size());
        for (const Edge& e : edges)
            if (o == Orientation::up ? e.up : e.down) g.add_edge(e.u, e.v);
        return g;
    }

    std::size_t count(Orientation o) const {
        return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [o](const Edge& e) {
            return o == Orientation::up ? e.up : e.down;
        }));
    }

    /// Triangle introducing edge e with the given orientation (which must be flagged).
    Triangle introducing(const Edge& e, Orientation o) const {
        return smallest_triangle(points[static_cast<std::size_t>(e.u)], points[static_cast<std::size_t>(e.v)], o);
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::pair(u, v),
                                   [](const Edge& e, std::pair<int, int> k) { return std::pair(e.u, e.v) < k; });
        return it != edges.end() && it->u == u && it->v == v;
    }
};

namespace detail {

struct DirectedHit {
    int from;
    int to;
    Orientation orientation;
};

inline std::vector<Edge> merge_hits(std::vector<DirectedHit>& hits) {
    for (auto& h : hits)
        if (h.from > h.to) std::swap(h.from, h.to);
    std::sort(hits.begin(), hits.end(), [](const DirectedHit& a, const DirectedHit& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    std::vector<Edge> edges;
    for (const auto& h : hits) {
        if (edges.empty() || edges.back().u != h.from || edges.back().v != h.to)
            edges.push_back(Edge{h.from, h.to, false, false});
        (h.orientation == Orientation::up ? edges.back().up : edges.back().down) = true;
    }
    return edges;
}

}  // namespace detail

/// G^up (odd cones) or G^down (even cones): each point is joined to the
/// closest point of each of its cones of that orientation, where closeness is
/// the size of the smallest triangle with the apex at a corner.
inline ProximityGraph build_half(std::span<const Point> pts, Orientation o) {
    require_general_position(pts);
    const int n = static_cast<int>(pts.size());
    std::vector<detail::DirectedHit> hits;
    for (int p = 0; p < n; ++p) {
        std::array<int, 7> best;
        best.fill(-1);
        std::array<Scalar, 7> best_size;
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            int cone = cone_index(pts[static_cast<std::size_t>(p)], pts[static_cast<std::size_t>(q)]);
            if (is_up_cone(cone) != (o == Orientation::up)) continue;
            Scalar s = smallest_triangle(pts[static_cast<std::size_t>(p)], pts[static_cast<std::size_t>(q)], o).size();
            auto c = static_cast<std::size_t>(cone);
            if (best[c] < 0 || s < best_size[c]) {
                best[c] = q;
                best_size[c] = s;
            }
        }
        for (int c = 1; c <= 6; ++c)
            if (best[static_cast<std::size_t>(c)] >= 0) hits.push_back({p, best[static_cast<std::size_t>(c)], o});
    }
    return ProximityGraph{{pts.begin(), pts.end()}, detail::merge_hits(hits)};
}

/// Union of two graphs on the same point set, provenance flags or-ed.
inline ProximityGraph merge(const ProximityGraph& a, const ProximityGraph& b) {
    std::vector<detail::DirectedHit> hits;
    for (const auto* g : {&a, &b})
        for (const Edge& e : g->edges) {
            if (e.up) hits.push_back({e.u, e.v, Orientation::up});
            if (e.down) hits.push_back({e.u, e.v, Orientation::down});
        }
    return ProximityGraph{a.points, detail::merge_hits(hits)};
}

/// Reference construction: an edge per pair whose smallest up- or
/// down-triangle contains no other point in its interior.
inline ProximityGraph build_by_oracle(std::span<const Point> pts) {
    require_general_position(pts);
    const int n = static_cast<int>(pts.size());
    ProximityGraph g{{pts.begin(), pts.end()}, {}};
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            Edge e{u, v, false, false};
            for (Orientation o : {Orientation::up, Orientation::down}) {
                Triangle t = smallest_triangle(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)], o);
                bool empty = true;
                for (int r = 0; r < n && empty; ++r)
                    if (r != u && r != v && contains(t, pts[static_cast<std::size_t>(r)], Mode::open)) empty = false;
                (o == Orientation::up ? e.up : e.down) = empty;
            }
            if (e.up || e.down) g.edges.push_back(e);
        }
    }
    return g;
}

/// Rank of every point in each coordinate (0 = smallest). Requires general position.
inline std::array<std::vector<int>, 3> coordinate_ranks(std::span<const Point> pts) {
    std::array<std::vector<int>, 3> rank;
    std::vector<int> order(pts.size());
    for (int c = 0; c < 3; ++c) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            ++predicate_count;
            return pts[static_cast<std::size_t>(a)][c] < pts[static_cast<std::size_t>(b)][c];
        });
        auto& r = rank[static_cast<std::size_t>(c)];
        r.assign(pts.size(), 0);
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k > 0 && pts[static_cast<std::size_t>(order[k])][c] == pts[static_cast<std::size_t>(order[k - 1])][c])
                throw GeneralPositionError("points " + std::to_string(order[k - 1]) + " and " +
                                           std::to_string(order[k]) + " share coordinate l" + std::to_string(c));
            r[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
        }
    }
    return rank;
}

namespace detail {

// Fenwick tree over positions 0..n-1 answering "argmax of value over
// positions >= x" via a reversed prefix structure.
class SuffixArgmax {
public:
    explicit SuffixArgmax(int n) : n_(n), value_(static_cast<std::size_t>(n) + 1, -1), who_(static_cast<std::size_t>(n) + 1, -1) {}

    void insert(int position, int value, int who) {
        for (int i = n_ - position; i <= n_; i += i & -i) {
            auto k = static_cast<std::size_t>(i);
            if (value > value_[k]) {
                value_[k] = value;
                who_[k] = who;
            }
        }
    }

    /// Point with the largest value among positions >= position, or -1.
    int query(int position) const {
        int best = -1, who = -1;
        for (int i = n_ - position; i > 0; i -= i & -i) {
            auto k = static_cast<std::size_t>(i);
            if (value_[k] > best) {
                best = value_[k];
                who = who_[k];
            }
        }
        return who;
    }

private:
    int n_;
    std::vector<int> value_;
    std::vector<int> who_;
};

// For every point p: among points q with ka(q) > ka(p) and kb(q) > kb(p),
// the one maximizing kc(q).
inline void dominance_sweep(const std::vector<int>& ka, const std::vector<int>& kb, const std::vector<int>& kc,
                            Orientation o, std::vector<DirectedHit>& hits) {
    const int n = static_cast<int>(ka.size());
    std::vector<int> by_a(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) by_a[static_cast<std::size_t>(ka[static_cast<std::size_t>(p)])] = p;
    SuffixArgmax tree(n);
    for (int k = n - 1; k >= 0; --k) {
        int p = by_a[static_cast<std::size_t>(k)];
        auto pi = static_cast<std::size_t>(p);
        if (kb[pi] + 1 < n) {
            int q = tree.query(kb[pi] + 1);
            if (q >= 0) hits.push_back({p, q, o});
        }
        tree.insert(kb[pi], kc[pi], p);
    }
}

}  // namespace detail

/// O(n log n) construction. In cone C1 of p (l0 and l1 larger than at p) the
/// nearest point is the one with the largest l2; the other five cones are the
/// same query on permuted or reflected coordinate ranks.
inline ProximityGraph build_fast(std::span<const Point> pts) {
    const int n = static_cast<int>(pts.size());
    auto rank = coordinate_ranks(pts);
    std::array<std::vector<int>, 3> flipped;
    for (std::size_t c = 0; c < 3; ++c) {
        flipped[c].resize(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) flipped[c][i] = n - 1 - rank[c][i];
    }
    std::vector<detail::DirectedHit> hits;
    hits.reserve(static_cast<std::size_t>(6 * n));
    // Odd cones: two coordinates increase, the third is maximized.
    detail::dominance_sweep(rank[0], rank[1], rank[2], Orientation::up, hits);     // C1
    detail::dominance_sweep(rank[0], rank[2], rank[1], Orientation::up, hits);     // C3
    detail::dominance_sweep(rank[1], rank[2], rank[0], Orientation::up, hits);     // C5
    // Even cones: two coordinates decrease, the third is minimized.
    detail::dominance_sweep(flipped[1], flipped[2], flipped[0], Orientation::down, hits);  // C2
    detail::dominance_sweep(flipped[0], flipped[1], flipped[2], Orientation::down, hits);  // C4
    detail::dominance_sweep(flipped[0], flipped[2], flipped[1], Orientation::down, hits);  // C6
    return ProximityGraph{{pts.begin(), pts.end()}, detail::merge_hits(hits)};
}

/// Subgraph induced by `keep` (vertex mask), reindexed in increasing order.
inline Graph induced(const Graph& g, const std::vector<bool>& keep, std::vector<int>* new_to_old = nullptr) {
    std::vector<int> remap(static_cast<std::size_t>(g.size()), -1);
    int k = 0;
    for (int v = 0; v < g.size(); ++v)
        if (keep[static_cast<std::size_t>(v)]) {
            remap[static_cast<std::size_t>(v)] = k++;
            if (new_to_old) new_to_old->push_back(v);
        }
    Graph h(k);
    for (int v = 0; v < g.size(); ++v) {
        if (remap[static_cast<std::size_t>(v)] < 0) continue;
        for (int w : g.neighbors(v))
            if (w > v && remap[static_cast<std::size_t>(w)] >= 0)
                h.add_edge(remap[static_cast<std::size_t>(v)], remap[static_cast<std::size_t>(w)]);
    }
    return h;
}

/// Connected-component label per vertex; vertices with removed[v] get -1.
inline int component_labels(const Graph& g, std::vector<int>& label, const std::vector<bool>* removed = nullptr) {
    label.assign(static_cast<std::size_t>(g.size()), -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.size(); ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0 || (removed && (*removed)[static_cast<std::size_t>(s)])) continue;
        label[static_cast<std::size_t>(s)] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (label[wi] < 0 && !(removed && (*removed)[wi])) {
                    label[wi] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return count;
}

}  // namespace theta6
