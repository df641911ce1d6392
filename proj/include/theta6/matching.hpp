#pragma once

// Maximum-cardinality matching (Edmonds' blossom algorithm) and the
// Tutte-Berge deficiency max_S odd(G \ S) - |S|.

#include "theta6/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace theta6 {

struct Matching {
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<int> unmatched;

    std::size_t size() const { return edges.size(); }
};

namespace detail {

class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.size()), match_(static_cast<std::size_t>(n_), -1), p_(static_cast<std::size_t>(n_)),
          base_(static_cast<std::size_t>(n_)), used_(static_cast<std::size_t>(n_)), blossom_(static_cast<std::size_t>(n_)) {}

    void solve() {
        for (int v = 0; v < n_; ++v)
            if (at(match_, v) < 0)
                for (int w : g_.neighbors(v))
                    if (at(match_, w) < 0) {
                        at(match_, v) = w;
                        at(match_, w) = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v) {
            if (at(match_, v) >= 0) continue;
            int end = find_path(v);
            while (end >= 0) {
                int pv = at(p_, end), next = at(match_, pv);
                at(match_, end) = pv;
                at(match_, pv) = end;
                end = next;
            }
        }
    }

    /// Vertices reachable from an exposed vertex by an even alternating path
    /// (the Gallai-Edmonds set D). Call after solve().
    std::vector<bool> even_reachable() {
        std::vector<bool> d(static_cast<std::size_t>(n_), false);
        for (int v = 0; v < n_; ++v) {
            if (at(match_, v) >= 0) continue;
            if (find_path(v) >= 0) throw std::logic_error("matching is not maximum");
            for (int w = 0; w < n_; ++w)
                if (used_[static_cast<std::size_t>(w)]) d[static_cast<std::size_t>(w)] = true;
        }
        return d;
    }

    const std::vector<int>& mate() const { return match_; }

private:
    static int& at(std::vector<int>& a, int i) { return a[static_cast<std::size_t>(i)]; }

    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (;;) {
            a = at(base_, a);
            seen[static_cast<std::size_t>(a)] = true;
            if (at(match_, a) < 0) break;
            a = at(p_, at(match_, a));
        }
        for (;;) {
            b = at(base_, b);
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = at(p_, at(match_, b));
        }
    }

    void mark_path(int v, int b, int child) {
        while (at(base_, v) != b) {
            blossom_[static_cast<std::size_t>(at(base_, v))] = true;
            blossom_[static_cast<std::size_t>(at(base_, at(match_, v)))] = true;
            at(p_, v) = child;
            child = at(match_, v);
            v = at(p_, at(match_, v));
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(p_.begin(), p_.end(), -1);
        for (int i = 0; i < n_; ++i) at(base_, i) = i;
        used_[static_cast<std::size_t>(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (at(base_, v) == at(base_, to) || at(match_, v) == to) continue;
                if (to == root || (at(match_, to) >= 0 && at(p_, at(match_, to)) >= 0)) {
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[static_cast<std::size_t>(at(base_, i))]) {
                            at(base_, i) = cur;
                            if (!used_[static_cast<std::size_t>(i)]) {
                                used_[static_cast<std::size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                } else if (at(p_, to) < 0) {
                    at(p_, to) = v;
                    if (at(match_, to) < 0) return to;
                    int next = at(match_, to);
                    used_[static_cast<std::size_t>(next)] = true;
                    q.push(next);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, p_, base_;
    std::vector<bool> used_, blossom_;
};

inline Matching to_matching(const std::vector<int>& mate) {
    Matching m;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
        int w = mate[static_cast<std::size_t>(v)];
        if (w < 0)
            m.unmatched.push_back(v);
        else if (v < w)
            m.edges.emplace_back(v, w);
    }
    return m;
}

}  // namespace detail

inline Matching max_matching(const Graph& g) {
    detail::Blossom b(g);
    b.solve();
    return detail::to_matching(b.mate());
}

struct TutteBergeWitness {
    std::vector<int> S;
    int odd_components = 0;
    int comp = 0;
    int deficiency = 0;  // odd_components - |S|
};

/// odd(G \ S), comp(G \ S) for one vertex set S.
inline TutteBergeWitness evaluate_tutte_set(const Graph& g, std::vector<int> S) {
    std::sort(S.begin(), S.end());
    std::vector<bool> removed(static_cast<std::size_t>(g.size()), false);
    for (int v : S) removed[static_cast<std::size_t>(v)] = true;
    std::vector<int> label;
    TutteBergeWitness w;
    w.comp = component_labels(g, label, &removed);
    std::vector<int> size(static_cast<std::size_t>(w.comp), 0);
    for (int l : label)
        if (l >= 0) ++size[static_cast<std::size_t>(l)];
    w.odd_components = static_cast<int>(std::count_if(size.begin(), size.end(), [](int s) { return s % 2 == 1; }));
    w.deficiency = w.odd_components - static_cast<int>(S.size());
    w.S = std::move(S);
    return w;
}

/// Tutte set from the Gallai-Edmonds decomposition: S = N(D) \ D. Attains the
/// deficiency of a maximum matching.
inline TutteBergeWitness gallai_edmonds_witness(const Graph& g) {
    detail::Blossom b(g);
    b.solve();
    auto d = b.even_reachable();
    std::vector<int> S;
    for (int v = 0; v < g.size(); ++v) {
        if (d[static_cast<std::size_t>(v)]) continue;
        for (int w : g.neighbors(v))
            if (d[static_cast<std::size_t>(w)]) {
                S.push_back(v);
                break;
            }
    }
    return evaluate_tutte_set(g, std::move(S));
}

enum class SearchMode { exhaustive, sampled };

inline constexpr int kExhaustiveLimit = 20;

namespace detail {

// Components of the vertices in `alive` using bitmask adjacency (n <= 32).
template <typename F>
void for_each_component(const std::vector<std::uint32_t>& adj, std::uint32_t alive, F&& f) {
    while (alive) {
        std::uint32_t frontier = alive & (~alive + 1);
        std::uint32_t comp = frontier;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t m = frontier; m; m &= m - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(m))];
            next &= alive & ~comp;
            comp |= next;
            frontier = next;
        }
        f(comp);
        alive &= ~comp;
    }
}

inline std::vector<std::uint32_t> mask_adjacency(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.size()), 0);
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1u << w;
    return adj;
}

inline std::vector<int> mask_vertices(std::uint32_t m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

}  // namespace detail

/// Maximum of odd(G \ S) - |S|. Exhaustive mode enumerates all subsets
/// (|V| <= 20) and is exact; sampled mode evaluates random subsets and the
/// Gallai-Edmonds set and yields a lower bound.
inline TutteBergeWitness tutte_berge(const Graph& g, SearchMode mode, std::uint64_t seed = 0, int samples = 2000) {
    const int n = g.size();
    if (mode == SearchMode::exhaustive) {
        if (n > kExhaustiveLimit) throw std::invalid_argument("exhaustive Tutte-Berge search needs at most 20 vertices");
        auto adj = detail::mask_adjacency(g);
        const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
        int best = -1 - n;
        std::uint32_t best_s = 0;
        for (std::uint32_t s = 0; s <= all; ++s) {
            int odd = 0;
            detail::for_each_component(adj, all & ~s, [&](std::uint32_t c) { odd += std::popcount(c) & 1; });
            int value = odd - std::popcount(s);
            if (value > best) {
                best = value;
                best_s = s;
            }
            if (s == all) break;
        }
        return evaluate_tutte_set(g, detail::mask_vertices(best_s));
    }
    TutteBergeWitness best = evaluate_tutte_set(g, {});
    auto consider = [&](TutteBergeWitness w) {
        if (w.deficiency > best.deficiency) best = std::move(w);
    };
    consider(gallai_edmonds_witness(g));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        std::vector<int> S;
        std::uint64_t density = rng() % 4 + 1;
        for (int v = 0; v < n; ++v)
            if (rng() % 8 < density) S.push_back(v);
        consider(evaluate_tutte_set(g, std::move(S)));
    }
    return best;
}

/// Largest comp(G \ S) - |S| (toughness excess) over the searched sets S.
struct ToughnessWitness {
    std::vector<int> S;
    int comp = 0;
    int excess = 0;
};

inline ToughnessWitness max_component_excess(const Graph& g, SearchMode mode, std::uint64_t seed = 0,
                                             int samples = 10000) {
    const int n = g.size();
    ToughnessWitness best{{}, 0, 0};
    bool have = false;
    auto consider = [&](std::vector<int> S, int comp) {
        int excess = comp - static_cast<int>(S.size());
        if (!have || excess > best.excess) {
            best = {std::move(S), comp, excess};
            have = true;
        }
    };
    if (mode == SearchMode::exhaustive) {
        if (n > kExhaustiveLimit) throw std::invalid_argument("exhaustive toughness search needs at most 20 vertices");
        auto adj = detail::mask_adjacency(g);
        const std::uint32_t all = (1u << n) - 1;
        int best_value = -1 - n;
        std::uint32_t best_s = 0;
        int best_comp = 0;
        for (std::uint32_t s = 0; s <= all; ++s) {
            int comp = 0;
            detail::for_each_component(adj, all & ~s, [&](std::uint32_t) { ++comp; });
            if (comp - std::popcount(s) > best_value) {
                best_value = comp - std::popcount(s);
                best_s = s;
                best_comp = comp;
            }
            if (s == all) break;
        }
        consider(detail::mask_vertices(best_s), best_comp);
        return best;
    }
    std::mt19937_64 rng(seed);
    std::vector<bool> removed(static_cast<std::size_t>(n));
    std::vector<int> label;
    for (int i = 0; i < samples; ++i) {
        std::vector<int> S;
        std::uint64_t density = rng() % 7 + 1;
        for (int v = 0; v < n; ++v) {
            bool r = rng() % 8 < density;
            removed[static_cast<std::size_t>(v)] = r;
            if (r) S.push_back(v);
        }
        int comp = component_labels(g, label, &removed);
        consider(std::move(S), comp);
    }
    return best;
}

}  // namespace theta6
