#pragma once

// Empty triangles that introduce edges, and maximum families of pairwise
// disjoint ones: interior-disjoint (alpha) or closed-disjoint, which is a
// strong matching (mu*).

#include "theta6/bits.hpp"
#include "theta6/graph.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace theta6 {

struct IntroTriangle {
    Triangle triangle;
    int u = 0;
    int v = 0;

    friend bool operator==(const IntroTriangle&, const IntroTriangle&) = default;
};

struct TriangleFamily {
    std::vector<IntroTriangle> triangles;
    Mode disjointness = Mode::open;  // open: interiors disjoint, closed: fully disjoint
    bool exact = false;
};

/// Up-triangle then down-triangle for each flagged edge, in edge order.
inline std::vector<IntroTriangle> introducing_triangles(const ProximityGraph& g) {
    std::vector<IntroTriangle> out;
    for (const Edge& e : g.edges) {
        if (e.up) out.push_back({g.introducing(e, Orientation::up), e.u, e.v});
        if (e.down) out.push_back({g.introducing(e, Orientation::down), e.u, e.v});
    }
    return out;
}

inline std::vector<IntroTriangle> introducing_triangles(std::span<const Point> pts) {
    return introducing_triangles(build_fast(pts));
}

inline bool disjoint(const Triangle& a, const Triangle& b, Mode mode) {
    return mode == Mode::open ? interiors_disjoint(a, b) : disjoint_closed(a, b);
}

enum class Solver { exact, greedy };

inline constexpr std::size_t kMaxExactFamily = 160;

namespace detail {

class MaxClique {
public:
    explicit MaxClique(std::vector<Bits> adj) : adj_(std::move(adj)), n_(adj_.size()) {}

    std::vector<int> solve() {
        // Static order: highest degree first.
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return adj_[static_cast<std::size_t>(a)].count() > adj_[static_cast<std::size_t>(b)].count(); });
        Bits all(n_);
        for (std::size_t i = 0; i < n_; ++i) all.set(i);
        std::vector<int> current;
        expand(all, current);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(Bits cand, std::vector<int>& current) {
        // Greedy coloring of the candidates; vertices sharing a color are pairwise non-adjacent.
        std::vector<int> verts, colors;
        Bits rest = cand;
        int color = 0;
        while (rest.any()) {
            ++color;
            Bits q = rest;
            for (int v : order_) {
                auto vi = static_cast<std::size_t>(v);
                if (!q.test(vi)) continue;
                q.reset(vi);
                q.subtract(adj_[vi]);
                rest.reset(vi);
                verts.push_back(v);
                colors.push_back(color);
            }
        }
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current.size() + static_cast<std::size_t>(colors[i]) <= best_.size()) return;
            auto v = static_cast<std::size_t>(verts[i]);
            current.push_back(verts[i]);
            Bits next = cand;
            next &= adj_[v];
            if (next.none()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
            cand.reset(v);
        }
    }

    std::vector<Bits> adj_;
    std::size_t n_;
    std::vector<int> order_;
    std::vector<int> best_;
};

}  // namespace detail

/// Largest subfamily of `tris` that is pairwise disjoint under `mode`.
/// Exact mode is a branch-and-bound maximum independent set of the conflict
/// graph; greedy mode takes triangles in order of fewest conflicts.
inline TriangleFamily max_disjoint_triangles(const std::vector<IntroTriangle>& tris, Mode mode, Solver solver) {
    const std::size_t m = tris.size();
    std::vector<Bits> compatible(m, Bits(m));
    std::vector<int> conflicts(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (disjoint(tris[i].triangle, tris[j].triangle, mode)) {
                compatible[i].set(j);
                compatible[j].set(i);
            } else {
                ++conflicts[i];
                ++conflicts[j];
            }
        }
    TriangleFamily out;
    out.disjointness = mode;
    std::vector<int> chosen;
    if (solver == Solver::exact) {
        if (m > kMaxExactFamily) throw std::invalid_argument("too many triangles for the exact solver");
        chosen = detail::MaxClique(compatible).solve();
        out.exact = true;
    } else {
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return conflicts[static_cast<std::size_t>(a)] < conflicts[static_cast<std::size_t>(b)];
        });
        Bits alive(m);
        for (std::size_t i = 0; i < m; ++i) alive.set(i);
        for (int t : order) {
            auto ti = static_cast<std::size_t>(t);
            if (!alive.test(ti)) continue;
            chosen.push_back(t);
            alive &= compatible[ti];
        }
        std::sort(chosen.begin(), chosen.end());
    }
    for (int i : chosen) out.triangles.push_back(tris[static_cast<std::size_t>(i)]);
    if (mode == Mode::closed) {
        std::vector<int> seen;
        for (const auto& t : out.triangles) {
            seen.push_back(t.u);
            seen.push_back(t.v);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::logic_error("closed-disjoint triangles share an endpoint");
    }
    return out;
}

inline TriangleFamily max_disjoint_triangles(std::span<const Point> pts, Mode mode, Solver solver) {
    return max_disjoint_triangles(introducing_triangles(pts), mode, solver);
}

/// Family members are pairwise disjoint under the family's mode and each is
/// an empty triangle with its two endpoints on the boundary.
inline bool valid_family(std::span<const Point> pts, const TriangleFamily& fam) {
    for (std::size_t i = 0; i < fam.triangles.size(); ++i) {
        const auto& t = fam.triangles[i];
        if (t.u == t.v || t.u < 0 || t.v < 0 || static_cast<std::size_t>(std::max(t.u, t.v)) >= pts.size()) return false;
        if (!(t.triangle == smallest_triangle(pts[static_cast<std::size_t>(t.u)], pts[static_cast<std::size_t>(t.v)],
                                              t.triangle.orientation)))
            return false;
        for (std::size_t r = 0; r < pts.size(); ++r)
            if (contains(t.triangle, pts[r], Mode::open)) return false;
        for (std::size_t j = i + 1; j < fam.triangles.size(); ++j)
            if (!disjoint(t.triangle, fam.triangles[j].triangle, fam.disjointness)) return false;
    }
    return true;
}

}  // namespace theta6
