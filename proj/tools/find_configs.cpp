// Randomized search for the small configurations hardcoded in generators.hpp.
// Usage: find_configs <target> [seed] [restarts]
//
// fig1, fig3 and cluster-r are plain rejection sampling. The other targets
// hill-climb on an integer parameter vector, accepting non-worsening moves,
// and restart from a fresh random vector when the budget runs out.
// Output is the parameter vector of the first hit.

#include "theta6/blocking.hpp"
#include "theta6/faces.hpp"
#include "theta6/generators.hpp"
#include "theta6/matching.hpp"
#include "theta6/triangles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace theta6;

namespace {

using Params = std::vector<long>;
constexpr int kInfeasible = 1000;

struct Search {
    std::function<Params(std::mt19937_64&)> init;
    std::function<Params(const Params&, std::mt19937_64&)> mutate;
    std::function<int(const Params&)> score;        // 0 on a hit
    std::function<bool(const Params&)> confirm;     // slower final check, optional
    int iterations = 0;                             // 0: no climbing
};

long uniform(std::mt19937_64& rng, long r) { return static_cast<long>(rng() % static_cast<unsigned long>(2 * r + 1)) - r; }

std::vector<Point> points(const Params& p) {
    std::vector<Point> out;
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) out.emplace_back(Scalar(p[i]), Scalar(p[i + 1]));
    return out;
}

std::vector<Point> stack(const std::vector<Point>& cluster, int copies, long spacing) {
    std::vector<Point> out;
    for (int k = 0; k < copies; ++k)
        for (const auto& p : cluster) out.emplace_back(p[0] + k * spacing, p[1] + k * spacing);
    return out;
}

int alpha(const std::vector<Point>& pts) { return static_cast<int>(max_disjoint_triangles(pts, Mode::open, Solver::exact).triangles.size()); }
int strong(const std::vector<Point>& pts) { return static_cast<int>(max_disjoint_triangles(pts, Mode::closed, Solver::exact).triangles.size()); }

Params random_params(std::mt19937_64& rng, std::size_t size, long r) {
    Params p(size);
    for (auto& x : p) x = uniform(rng, r);
    return p;
}

// Rejection sampling: score is 0 or 1 and every restart is a fresh draw.
Search sampled(int n, std::function<bool(const std::vector<Point>&)> accept) {
    Search s;
    s.init = [n](std::mt19937_64& rng) { return random_params(rng, 2 * static_cast<std::size_t>(n), 20); };
    s.score = [accept](const Params& p) {
        auto pts = points(p);
        return general_position(pts) || !accept(pts) ? 1 : 0;
    };
    return s;
}

// Nudges one random coordinate; occasionally a long jump.
std::function<Params(const Params&, std::mt19937_64&)> nudge(long small, long big) {
    return [small, big](const Params& p, std::mt19937_64& rng) {
        Params q = p;
        long r = rng() % 4 == 0 ? big : small;
        q[rng() % q.size()] += uniform(rng, r);
        return q;
    };
}

// Cluster S: in each stacked copy, the triangles that stay clear of the
// neighbouring copies must pairwise meet.
int cluster_s_score(const Params& p) {
    auto pts = points(p);
    if (general_position(pts)) return kInfeasible;
    auto tris = introducing_triangles(pts);
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i][2] > pts[lo][2]) lo = i;
        if (pts[i][2] < pts[hi][2]) hi = i;
    }
    int bad = 0;
    for (int side = 0; side < 2; ++side) {
        const int ex = static_cast<int>(side == 0 ? lo : hi);
        std::vector<Triangle> keep;
        for (const auto& t : tris) {
            if (t.u == ex || t.v == ex) continue;
            bool touch = false;
            for (const auto& c : t.triangle.corners())
                touch = touch || (side == 0 ? c[2] >= pts[static_cast<std::size_t>(ex)][2] : c[2] <= pts[static_cast<std::size_t>(ex)][2]);
            if (!touch) keep.push_back(t.triangle);
        }
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (disjoint_closed(keep[i], keep[j])) ++bad;
    }
    return bad;
}

// Gadget layout: base pair b, middle pair m, step v; gadget k adds m + (k-1)v
// and b + kv. Target alpha >= 5t + 1 for t = 1..3.
std::vector<Point> gadget_points(const Params& p, int t) {
    std::vector<Point> out;
    auto at = [&](std::size_t i, long k) { return Point(Scalar(p[i] + k * p[8]), Scalar(p[i + 1] + k * p[9])); };
    out.push_back(at(0, 0));
    out.push_back(at(2, 0));
    for (long k = 1; k <= t; ++k) {
        out.push_back(at(4, k - 1));
        out.push_back(at(6, k - 1));
        out.push_back(at(0, k));
        out.push_back(at(2, k));
    }
    return out;
}

int gadget_score(const Params& p) {
    int s = 0;
    for (int t = 1; t <= 3; ++t) {
        auto pts = gadget_points(p, t);
        if (general_position(pts)) return kInfeasible;
        auto tris = introducing_triangles(pts);
        if (tris.size() > kMaxExactFamily) return kInfeasible;
        int a = static_cast<int>(max_disjoint_triangles(tris, Mode::open, Solver::exact).triangles.size());
        s += std::max(0, 5 * t + 1 - a);
    }
    return s;
}

// Many edges: m points on a vertical segment plus six integer surround points.
std::vector<Point> many_edges_points(const Params& p, int m) {
    std::vector<Point> out;
    for (int k = 0; k < m; ++k) {
        Scalar h(k, m);
        h.canonicalize();
        out.emplace_back(Scalar(2 * h), Scalar(-h));
    }
    auto surround = points(p);
    out.insert(out.end(), surround.begin(), surround.end());
    return out;
}

int many_edges_score(const Params& p) {
    int s = 0;
    for (int m : {1, 2, 3, 5, 8}) {
        auto pts = many_edges_points(p, m);
        if (general_position(pts)) return kInfeasible;
        const int n = m + 6;
        s += std::abs(5 * n - 17 - static_cast<int>(build_fast(pts).edges.size()));
    }
    return s;
}

// Sum of degree deficits below 7, ignoring the `skip` worst vertices.
int degree_deficit(const std::vector<Point>& pts, std::size_t skip) {
    if (general_position(pts)) return kInfeasible;
    auto g = build_fast(pts).graph();
    std::vector<int> def;
    for (int v = 0; v < g.size(); ++v) def.push_back(std::max(0, 7 - static_cast<int>(g.neighbors(v).size())));
    std::sort(def.rbegin(), def.rend());
    int s = 0;
    for (std::size_t i = skip; i < def.size(); ++i) s += def[i];
    return s;
}

// Half plus its image under symmetry (k, reflect) shifted by (dx, dy).
std::vector<Point> glued(const Params& p) {
    auto half = min_degree_half();
    auto out = half;
    for (const auto& q : half)
        out.push_back(detail::shifted(detail::frame_symmetry(q, static_cast<int>(p[0]), p[1] != 0), Scalar(p[2]), Scalar(p[3])));
    return out;
}

std::map<std::string, Search> targets() {
    std::map<std::string, Search> t;
    t["fig1"] = sampled(6, [](const std::vector<Point>& p) {
        return max_matching(build_fast(p).graph()).size() == 3 && min_blocking_set(p, Solver::exact).size() == 5;
    });
    t["fig3"] = sampled(7, [](const std::vector<Point>& p) {
        std::vector<bool> s(p.size(), true);
        s.back() = false;
        auto down = induced_face_profile(p, s, Orientation::down, false);
        auto up = induced_face_profile(p, s, Orientation::up, false);
        return down.representative_degree.at(0) == 3 && up.representative_degree.at(0) == 4;
    });
    t["cluster-r"] = sampled(4, [](const std::vector<Point>& p) {
        auto g = build_fast(p);
        if (g.edges.size() != 5 || introducing_triangles(g).size() != 8 || alpha(p) != 3) return false;
        return alpha(stack(p, 2, kClusterRSpacing)) == 6 && alpha(stack(p, 3, kClusterRSpacing)) == 9;
    });

    Search s;
    s.init = [](std::mt19937_64& rng) { return random_params(rng, 10, 50); };
    s.mutate = nudge(5, 5);
    s.score = cluster_s_score;
    s.confirm = [](const Params& p) {
        auto pts = points(p);
        return strong(pts) == 2 && strong(stack(pts, 2, kClusterSSpacing)) == 4 && strong(stack(pts, 3, kClusterSSpacing)) == 6;
    };
    s.iterations = 3000;
    t["cluster-s"] = s;

    Search g;
    g.init = [](std::mt19937_64& rng) {
        auto p = random_params(rng, 10, 30);
        p[8] = uniform(rng, 60);
        p[9] = uniform(rng, 60);
        return p;
    };
    g.mutate = nudge(6, 6);
    g.score = gadget_score;
    g.iterations = 1500;
    t["gadget"] = g;

    Search m;
    m.init = [](std::mt19937_64& rng) { return random_params(rng, 12, 40); };
    m.mutate = nudge(4, 4);
    m.score = many_edges_score;
    m.confirm = [](const Params& p) {
        for (int k = 1; k <= 30; ++k)
            if (static_cast<int>(build_fast(many_edges_points(p, k)).edges.size()) != 5 * (k + 6) - 17) return false;
        return true;
    };
    m.iterations = 4000;
    t["many-edges"] = m;

    Search h;
    h.init = [](std::mt19937_64& rng) { return random_params(rng, 26, 60); };
    h.mutate = nudge(4, 40);
    h.score = [](const Params& p) { return degree_deficit(points(p), 2); };
    h.iterations = 6000;
    t["min-degree-half"] = h;

    Search j;
    j.init = [](std::mt19937_64& rng) {
        return Params{static_cast<long>(rng() % 6), static_cast<long>(rng() % 2), uniform(rng, 1500), uniform(rng, 1500)};
    };
    j.mutate = [](const Params& p, std::mt19937_64& rng) {
        Params q = p;
        long r = rng() % 3 == 0 ? 300 : 20;
        q[2] += uniform(rng, r);
        q[3] += uniform(rng, r);
        if (rng() % 10 == 0) {
            q[0] = static_cast<long>(rng() % 6);
            q[1] = static_cast<long>(rng() % 2);
        }
        return q;
    };
    j.score = [](const Params& p) { return degree_deficit(glued(p), 0); };
    j.iterations = 1500;
    t["min-degree-glue"] = j;
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    auto all = targets();
    auto usage = [&] {
        std::cerr << "usage: find_configs <target> [seed] [restarts]\ntargets:";
        for (const auto& [name, _] : all) std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
    };
    if (argc < 2) return usage();
    auto it = all.find(argv[1]);
    if (it == all.end()) return usage();
    const Search& search = it->second;
    std::mt19937_64 rng(argc > 2 ? std::stoull(argv[2]) : 1);
    const long restarts = argc > 3 ? std::stol(argv[3]) : (search.iterations ? 400 : 200000);

    for (long r = 0; r < restarts; ++r) {
        Params p = search.init(rng);
        int s = search.score(p);
        for (int i = 0; i < search.iterations && s > 0; ++i) {
            Params q = search.mutate(p, rng);
            int t = search.score(q);
            if (t <= s) {
                p = std::move(q);
                s = t;
            }
        }
        if (s != 0 || (search.confirm && !search.confirm(p))) continue;
        for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? ", " : "") << p[i];
        std::cout << "\n";
        return 0;
    }
    std::cerr << "nothing found\n";
    return 1;
}
