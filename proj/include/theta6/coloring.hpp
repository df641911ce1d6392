#pragma once

#include "theta6/graph.hpp"

#include <algorithm>
#include <vector>

namespace theta6 {

struct Degeneracy {
    std::vector<int> order;  // removal order, each vertex of minimum remaining degree
    int value = 0;           // largest degree at removal
};

/// Repeated minimum-degree removal with bucket queues, O(n + m).
inline Degeneracy degeneracy_order(const Graph& g) {
    const int n = g.size();
    Degeneracy out;
    std::vector<int> deg(static_cast<std::size_t>(n));
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<int>(g.neighbors(v).size());
        max_deg = std::max(max_deg, deg[static_cast<std::size_t>(v)]);
    }
    std::vector<std::vector<int>> bucket(static_cast<std::size_t>(max_deg) + 1);
    for (int v = 0; v < n; ++v) bucket[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        d = std::max(0, d - 1);
        int v = -1;
        while (v < 0) {
            auto& b = bucket[static_cast<std::size_t>(d)];
            while (!b.empty()) {
                int c = b.back();
                b.pop_back();
                if (!gone[static_cast<std::size_t>(c)] && deg[static_cast<std::size_t>(c)] == d) {
                    v = c;
                    break;
                }
            }
            if (v < 0) ++d;
        }
        gone[static_cast<std::size_t>(v)] = true;
        out.order.push_back(v);
        out.value = std::max(out.value, d);
        for (int w : g.neighbors(v)) {
            auto wi = static_cast<std::size_t>(w);
            if (gone[wi]) continue;
            --deg[wi];
            bucket[static_cast<std::size_t>(deg[wi])].push_back(w);
        }
    }
    return out;
}

/// Greedy coloring in reverse degeneracy order; uses at most degeneracy + 1 colors.
inline std::vector<int> greedy_color(const Graph& g) {
    const int n = g.size();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    auto order = degeneracy_order(g).order;
    std::vector<bool> used;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        used.assign(g.neighbors(*it).size() + 1, false);
        for (int w : g.neighbors(*it)) {
            int c = color[static_cast<std::size_t>(w)];
            if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = true;
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(*it)] = c;
    }
    return color;
}

inline int color_count(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

/// Largest color class of the greedy coloring: at least n / (degeneracy + 1) vertices.
inline std::vector<int> greedy_independent(const Graph& g) {
    auto color = greedy_color(g);
    std::vector<int> size(static_cast<std::size_t>(color_count(color)), 0);
    for (int c : color) ++size[static_cast<std::size_t>(c)];
    if (size.empty()) return {};
    int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v)
        if (color[static_cast<std::size_t>(v)] == best) out.push_back(v);
    return out;
}

inline int min_degree(const Graph& g) {
    if (g.size() == 0) return 0;
    std::size_t m = g.neighbors(0).size();
    for (int v = 1; v < g.size(); ++v) m = std::min(m, g.neighbors(v).size());
    return static_cast<int>(m);
}

}  // namespace theta6
