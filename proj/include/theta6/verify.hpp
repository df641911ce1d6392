#pragma once

// Claim harness: evaluates the per-instance statements about Theta_6-graphs
// on families of point sets, reports failures with re-checkable witnesses,
// and searches for counterexamples to the open conjectures.

#include "theta6/bounds.hpp"
#include "theta6/coloring.hpp"
#include "theta6/faces.hpp"
#include "theta6/generators.hpp"
#include "theta6/io.hpp"
#include "theta6/spanning.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace theta6 {

enum class Status { pass, fail, skipped };

inline const char* name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
    }
}

struct ClaimResult {
    std::string claim;
    std::string instance;
    Status status = Status::pass;
    std::string detail;
    json witness;  // certificate for failures
};

struct Finding {
    std::string target;
    std::string instance;
    std::string detail;
    json certificate;
    bool known = false;  // documented per-instance observation, not an open question
};

/// Per-instance claims. Minimum-over-all-sets statements are findings, not claims.
inline const std::vector<std::string>& all_claims() {
    static const std::vector<std::string> ids{"T1", "T3", "L1", "L2", "L3", "L4", "L5", "F1",
                                              "B1", "T2a", "L6", "E1", "D1", "C1"};
    return ids;
}

struct Budget {
    int exhaustive_limit = 14;      // exhaustive subset search up to this n
    int toughness_samples = 10000;  // sampled S above it
    int face_subsets = 4;           // random S per instance for the face claims
    int exact_blocking_n = 9;       // exact beta up to this n
    std::size_t exact_blocking_triangles = kMaxExactBlocking;
};

struct NamedSet {
    std::string name;
    std::vector<Point> points;
    std::vector<bool> subset;  // optional S for the face claims
};

struct InstanceReport {
    std::vector<ClaimResult> results;
    std::vector<Finding> findings;
};

namespace detail {

inline int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

inline json instance_json(const NamedSet& inst) {
    json j = point_set_to_json(inst.points, inst.subset);
    j["name"] = inst.name;
    return j;
}

inline std::vector<std::vector<bool>> face_subsets(const NamedSet& inst, int count, std::mt19937_64& rng) {
    std::vector<std::vector<bool>> out;
    const std::size_t n = inst.points.size();
    if (!inst.subset.empty()) out.push_back(inst.subset);
    for (int k = 0; k < count; ++k) {
        std::vector<bool> s(n);
        std::uint64_t density = 2 + rng() % 5;  // keep 2/8 .. 6/8 of the points
        for (std::size_t v = 0; v < n; ++v) s[v] = rng() % 8 < density;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

/// Evaluates `claims` on one point set. Deterministic for a fixed seed.
inline InstanceReport evaluate_instance(const NamedSet& inst, const std::set<std::string>& claims, const Budget& budget,
                                        std::uint64_t seed) {
    InstanceReport rep;
    const auto& P = inst.points;
    const int n = static_cast<int>(P.size());
    std::mt19937_64 rng(seed);
    auto wanted = [&](const char* id) { return claims.count(id) > 0; };
    auto record = [&](const std::string& id, bool ok, std::string detail, json witness = {}) {
        ClaimResult r{id, inst.name, ok ? Status::pass : Status::fail, std::move(detail), {}};
        if (!ok) {
            r.witness = std::move(witness);
            r.witness["kind"] = "claim-failure";
            r.witness["claim"] = id;
            r.witness["instance"] = detail::instance_json(inst);
        }
        rep.results.push_back(std::move(r));
    };
    auto skip = [&](const std::string& id, std::string why) { rep.results.push_back({id, inst.name, Status::skipped, std::move(why), {}}); };

    const ProximityGraph g = build_fast(P);
    const Graph G = g.graph();
    const Matching m = max_matching(G);
    const int mu = static_cast<int>(m.size());

    if (wanted("E1")) {
        int e = static_cast<int>(g.edges.size());
        bool ok = n < 3 || (e >= n - 1 && e <= 5 * n - 12);
        record("E1", ok, "n=" + std::to_string(n) + " edges=" + std::to_string(e));
    }
    if (wanted("T1")) {
        int need = std::max(0, detail::ceil_div(3 * n - 8, 7));
        record("T1", mu >= need, "mu=" + std::to_string(mu) + " bound=" + std::to_string(need),
               {{"matching", matching_to_json(m)}});
    }
    if (wanted("T3")) {
        TutteBergeWitness w = n <= budget.exhaustive_limit ? tutte_berge(G, SearchMode::exhaustive) : gallai_edmonds_witness(G);
        bool ok = w.deficiency == n - 2 * mu && w.odd_components <= w.comp;
        record("T3", ok,
               std::string(n <= budget.exhaustive_limit ? "exhaustive" : "gallai-edmonds") + " deficiency=" +
                   std::to_string(w.deficiency) + " n-2mu=" + std::to_string(n - 2 * mu),
               {{"matching", matching_to_json(m)}, {"tutte", tutte_to_json(w)}});
    }
    if (wanted("L5")) {
        ToughnessWitness w = n <= budget.exhaustive_limit
                                 ? max_component_excess(G, SearchMode::exhaustive)
                                 : max_component_excess(G, SearchMode::sampled, rng(), budget.toughness_samples);
        if (n > budget.exhaustive_limit) {
            auto ge = gallai_edmonds_witness(G);
            if (ge.comp - static_cast<int>(ge.S.size()) > w.excess) w = {ge.S, ge.comp, ge.comp - static_cast<int>(ge.S.size())};
        }
        record("L5", 7 * w.excess <= n + 16,
               std::string(n <= budget.exhaustive_limit ? "exhaustive" : "sampled") + " max comp-|S|=" + std::to_string(w.excess) +
                   " bound=(n+16)/7",
               {{"S", w.S}});
    }
    if (wanted("L1")) {
        bool ok = true;
        std::string where;
        for (int p = 0; p < n && ok; ++p)
            for (int q = p + 1; q < n && ok; ++q)
                for (Orientation o : {Orientation::up, Orientation::down}) {
                    try {
                        path_in_triangle(g, p, q, o);
                    } catch (const PathNotFound& e) {
                        ok = false;
                        where = e.what();
                        break;
                    }
                }
        record("L1", ok, ok ? "all pairs" : where);
    }
    if (wanted("L2")) {
        auto tree = mst_td(P);
        bool inside = true;
        for (const auto& [u, v] : tree.edges) {
            auto it = std::lower_bound(g.edges.begin(), g.edges.end(), Edge{u, v, false, false},
                                       [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
            if (it == g.edges.end() || it->u != u || it->v != v || !it->up || !it->down) inside = false;
        }
        Graph both(n);
        for (const Edge& e : g.edges)
            if (e.up && e.down) both.add_edge(e.u, e.v);
        std::vector<int> label;
        bool connected = n == 0 || component_labels(both, label) == 1;
        record("L2", inside && connected,
               std::string("mst in both halves: ") + (inside ? "yes" : "no") + ", intersection connected: " + (connected ? "yes" : "no"));
    }
    if (wanted("D1")) {
        int md = min_degree(G), dg = degeneracy_order(G).value;
        record("D1", md <= 9 && dg <= 9, "min degree=" + std::to_string(md) + " degeneracy=" + std::to_string(dg));
    }
    if (wanted("C1")) {
        auto color = greedy_color(G);
        bool proper = true;
        for (const Edge& e : g.edges)
            if (color[static_cast<std::size_t>(e.u)] == color[static_cast<std::size_t>(e.v)]) proper = false;
        auto ind = greedy_independent(G);
        std::set<int> in(ind.begin(), ind.end());
        for (const Edge& e : g.edges)
            if (in.count(e.u) && in.count(e.v)) proper = false;
        int colors = color_count(color);
        bool ok = proper && colors <= 10 && 10 * static_cast<int>(ind.size()) >= n;
        record("C1", ok, "colors=" + std::to_string(colors) + " independent=" + std::to_string(ind.size()));
    }

    bool faces_wanted = wanted("L3") || wanted("L4") || wanted("F1") || wanted("T2a");
    std::vector<std::vector<bool>> subsets;
    if (faces_wanted && n >= 1) subsets = detail::face_subsets(inst, budget.face_subsets, rng);
    if (wanted("L3") || wanted("L4") || wanted("F1")) {
        bool l3 = true, l4 = true, f1 = true;
        std::string l3d, l4d, f1d;
        json l3w, l4w, f1w;
        for (const auto& s : subsets) {
            FaceProfile up, down;
            try {
                up = induced_face_profile(P, s, Orientation::up);
                down = induced_face_profile(P, s, Orientation::down);
            } catch (const std::exception& e) {
                f1 = false;
                f1d = e.what();
                f1w = {{"subset", s}};
                continue;
            }
            for (const auto* pr : {&up, &down}) {
                if (pr->max_components_per_face > 1 || pr->f3 + pr->f4plus != pr->components) {
                    l3 = false;
                    l3d = std::string(name(pr->orientation)) + ": " + std::to_string(pr->max_components_per_face) + " components in a face";
                    l3w = {{"subset", s}};
                }
                if (pr->degree_sum != 2 * pr->vertex_count - 4 || pr->degree_mismatches != 0) {
                    f1 = false;
                    f1d = std::string(name(pr->orientation)) + ": degree sum " + std::to_string(pr->degree_sum) + ", mismatches " +
                          std::to_string(pr->degree_mismatches);
                    f1w = {{"subset", s}};
                }
            }
            if (up.f3 > down.f4plus || down.f3 > up.f4plus) {
                l4 = false;
                l4d = "f3(up)=" + std::to_string(up.f3) + " f4+(down)=" + std::to_string(down.f4plus) + " f3(down)=" +
                      std::to_string(down.f3) + " f4+(up)=" + std::to_string(up.f4plus);
                l4w = {{"subset", s}};
            }
        }
        std::string k = std::to_string(subsets.size()) + " subsets";
        if (wanted("L3")) record("L3", l3, l3 ? k : l3d, l3w);
        if (wanted("L4")) record("L4", l4, l4 ? k : l4d, l4w);
        if (wanted("F1")) record("F1", f1, f1 ? k : f1d, f1w);
    }

    const auto tris = introducing_triangles(g);
    const bool exact_beta = n <= budget.exact_blocking_n && tris.size() <= budget.exact_blocking_triangles;
    std::optional<BlockingSet> beta;
    if (exact_beta && (wanted("B1") || wanted("T2a") || wanted("L6"))) beta = min_blocking_set(P, Solver::exact);

    if (wanted("B1")) {
        if (!beta) {
            skip("B1", "exact blocking limited to n <= " + std::to_string(budget.exact_blocking_n));
        } else {
            int b = static_cast<int>(beta->size());
            int a = static_cast<int>(max_disjoint_triangles(tris, Mode::open, Solver::exact).triangles.size());
            auto chk = verify_blocking(P, beta->blockers);
            bool ok = 2 * b >= n - 1 && a <= b && chk.geometric && chk.rebuilt;
            record("B1", ok,
                   "beta=" + std::to_string(b) + " alpha=" + std::to_string(a) + " checks agree: " +
                       (chk.geometric == chk.rebuilt ? "yes" : "no"),
                   {{"blockers", points_to_json(beta->blockers)}});
            if (4 * b < 3 * n - 8)
                rep.findings.push_back({"beta-3n/4", inst.name, "beta=" + std::to_string(b) + " < 3n/4 - 2",
                                        {{"kind", "finding"}, {"target", "beta-3n/4"}, {"points", points_to_json(P)},
                                         {"blockers", points_to_json(beta->blockers)}}});
            if (b > 2 * mu) {
                auto w = gallai_edmonds_witness(G);
                rep.findings.push_back({"t2a-instance", inst.name,
                                        "beta(P)=" + std::to_string(b) + " exceeds 2 mu(P)=" + std::to_string(2 * mu),
                                        {{"kind", "finding"}, {"target", "t2a-instance"}, {"points", points_to_json(P)},
                                         {"matching", matching_to_json(m)}, {"tutte", tutte_to_json(w)}, {"beta", b}},
                                        true});
            }
        }
    }
    if (wanted("T2a")) {
        // For any S, the representatives R of the components of G \ S are
        // blocked by S (this is where the proof spends S); with exact
        // blocking on R this also gives |S| >= beta(R).
        std::vector<std::vector<int>> sets;
        sets.push_back(gallai_edmonds_witness(G).S);
        for (const auto& s : subsets) {
            std::vector<int> S;
            for (int v = 0; v < n; ++v)
                if (s[static_cast<std::size_t>(v)]) S.push_back(v);
            sets.push_back(std::move(S));
        }
        bool ok = true;
        std::string d;
        json w;
        int exact_checked = 0;
        for (const auto& S : sets) {
            std::vector<bool> removed(static_cast<std::size_t>(n), false);
            for (int v : S) removed[static_cast<std::size_t>(v)] = true;
            std::vector<int> label;
            int comps = component_labels(G, label, &removed);
            std::vector<Point> reps(static_cast<std::size_t>(comps));
            std::vector<bool> have(static_cast<std::size_t>(comps), false);
            for (int v = 0; v < n; ++v) {
                int c = label[static_cast<std::size_t>(v)];
                if (c >= 0 && !have[static_cast<std::size_t>(c)]) {
                    have[static_cast<std::size_t>(c)] = true;
                    reps[static_cast<std::size_t>(c)] = P[static_cast<std::size_t>(v)];
                }
            }
            std::vector<Point> spts;
            for (int v : S) spts.push_back(P[static_cast<std::size_t>(v)]);
            bool blocked = true;
            for (const auto& t : introducing_triangles(reps))
                if (std::none_of(spts.begin(), spts.end(), [&](const Point& b) { return contains(t.triangle, b, Mode::open); }))
                    blocked = false;
            if (blocked && reps.size() <= static_cast<std::size_t>(budget.exact_blocking_n) && reps.size() >= 2) {
                auto rt = introducing_triangles(reps);
                if (rt.size() <= budget.exact_blocking_triangles) {
                    ++exact_checked;
                    if (min_blocking_set(reps, Solver::exact).size() > S.size()) blocked = false;
                }
            }
            if (!blocked) {
                ok = false;
                d = "S of size " + std::to_string(S.size()) + " does not block the representatives";
                w = {{"S", S}};
                break;
            }
        }
        record("T2a", ok,
               ok ? std::to_string(sets.size()) + " sets S block their representatives (" + std::to_string(exact_checked) +
                        " with exact beta(R) <= |S|)"
                  : d,
               w);
    }
    if (wanted("L6")) {
        std::vector<Point> B = beta ? beta->blockers : vertical_blockers(P);
        bool ok = n < 1 || verify_blocking(P, B).ok();
        std::string d = std::string(beta ? "exact" : "2(n-1)") + " start with " + std::to_string(B.size()) + " blockers";
        if (ok && n >= 1) {
            auto ext = extend_with_blocker(P, B);
            const Point& a1 = ext.points.back();
            const Point& b = ext.blockers.back();
            ok = ext.blockers.size() == B.size() + 1 && verify_blocking(ext.points, ext.blockers).ok();
            for (const auto& p : P)
                for (Orientation o : {Orientation::up, Orientation::down})
                    if (!contains(smallest_triangle(a1, p, o), b, Mode::open)) ok = false;
            auto chain = blocker_chain(std::max(1, std::min(n, 12)));
            ok = ok && static_cast<int>(chain.blockers.size()) == static_cast<int>(chain.points.size()) - 1 &&
                 verify_blocking(chain.points, chain.blockers).ok();
        }
        record("L6", ok, d);
    }
    return rep;
}

struct SuiteReport {
    std::vector<ClaimResult> results;
    std::vector<Finding> findings;

    int failures() const {
        return static_cast<int>(std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return r.status == Status::fail; }));
    }
    int open_findings() const {
        return static_cast<int>(std::count_if(findings.begin(), findings.end(), [](const Finding& f) { return !f.known; }));
    }
};

/// Runs every instance (optionally on `jobs` threads); results keep instance order.
inline SuiteReport run_suite(const std::vector<std::function<NamedSet()>>& family, const std::set<std::string>& claims,
                             const Budget& budget, std::uint64_t seed = 0, int jobs = 1) {
    std::vector<InstanceReport> out(family.size());
    std::vector<std::string> errors(family.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < family.size();) {
            try {
                out[i] = evaluate_instance(family[i](), claims, budget, seed * 1000003 + i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    SuiteReport rep;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!errors[i].empty())
            rep.results.push_back({"ERROR", "instance " + std::to_string(i), Status::fail, errors[i], {}});
        rep.results.insert(rep.results.end(), out[i].results.begin(), out[i].results.end());
        rep.findings.insert(rep.findings.end(), out[i].findings.begin(), out[i].findings.end());
    }
    return rep;
}

/// Uniform sets with n cycling through [lo, hi], one per seed.
inline std::vector<std::function<NamedSet()>> uniform_family(std::uint64_t first_seed, std::uint64_t count, int lo, int hi) {
    std::vector<std::function<NamedSet()>> fam;
    for (std::uint64_t s = first_seed; s < first_seed + count; ++s) {
        int n = lo + static_cast<int>(s % static_cast<std::uint64_t>(hi - lo + 1));
        fam.push_back([s, n] { return NamedSet{"uniform(n=" + std::to_string(n) + ",seed=" + std::to_string(s) + ")", gen_uniform(n, s).points, {}}; });
    }
    return fam;
}

/// The extremal constructions at sizes the exact solvers handle.
inline std::vector<std::function<NamedSet()>> generator_family() {
    std::vector<std::function<NamedSet()>> fam;
    auto add = [&](std::string label, std::function<Instance()> make) {
        fam.push_back([label, make] {
            Instance i = make();
            return NamedSet{label, i.points, i.subset};
        });
    };
    add("fig1", gen_fig1);
    add("fig3", gen_fig3);
    for (int n : {2, 5, 12, 20}) add("vertical(n=" + std::to_string(n) + ")", [n] { return gen_vertical_line(n); });
    for (int t = 1; t <= 3; ++t) add("alpha-clusters(t=" + std::to_string(t) + ")", [t] { return gen_alpha_clusters(t); });
    for (int t = 1; t <= 3; ++t) add("strong-clusters(t=" + std::to_string(t) + ")", [t] { return gen_strong_clusters(t); });
    for (int t = 0; t <= 3; ++t) add("blocking-gadgets(t=" + std::to_string(t) + ")", [t] { return gen_blocking_gadgets(t); });
    for (int n : {7, 11, 16}) add("many-edges(n=" + std::to_string(n) + ")", [n] { return gen_many_edges(n); });
    add("min-degree7", gen_min_degree7);
    return fam;
}

// ------------------------------------------------------------ reduction (b)

struct ReductionRow {
    std::string instance;
    int n = 0;
    int b = 0;               // exact beta(P)
    int matching = 0;        // maximum matching of G(P u B)
    bool independent = false;  // P independent in G(P u B)
    bool counting = false;     // n <= |M| + (n + b - 2|M|)
    bool matching_bound = false;  // |M| >= c(n + b) + d
    bool derived = false;      // b >= (cn + d)/(1 - c)
    Scalar threshold;
};

struct ReductionReport {
    Scalar c, d;
    std::vector<ReductionRow> rows;
    std::vector<Finding> findings;
    bool counting_ok() const {
        return std::all_of(rows.begin(), rows.end(), [](const ReductionRow& r) { return r.independent && r.counting; });
    }
};

/// The counting step of the matching-to-blocking reduction, replayed per
/// instance on a minimum blocking set. Bound violations are findings.
inline ReductionReport check_reduction_2b(const Scalar& c, const Scalar& d, const std::vector<NamedSet>& instances,
                                          int exact_limit = 9) {
    if (!(c < 1)) throw std::invalid_argument("c must be below 1");
    ReductionReport rep{c, d, {}, {}};
    for (const auto& inst : instances) {
        const int n = static_cast<int>(inst.points.size());
        if (n > exact_limit) continue;
        ReductionRow row;
        row.instance = inst.name;
        row.n = n;
        row.threshold = (c * n + d) / (1 - c);
        if (n <= 1) {
            row.independent = row.counting = row.matching_bound = row.derived = true;
            rep.rows.push_back(row);
            continue;
        }
        auto B = min_blocking_set(inst.points, Solver::exact);
        row.b = static_cast<int>(B.size());
        std::vector<Point> all = inst.points;
        all.insert(all.end(), B.blockers.begin(), B.blockers.end());
        auto g = build_fast(all);
        row.independent = std::none_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) { return e.v < n; });
        row.matching = static_cast<int>(max_matching(g.graph()).size());
        row.counting = n <= row.matching + (n + row.b - 2 * row.matching);
        row.matching_bound = Scalar(row.matching) >= c * (n + row.b) + d;
        row.derived = Scalar(row.b) >= row.threshold;
        if (!row.derived || !row.matching_bound)
            rep.findings.push_back({"reduction-2b", inst.name,
                                    "beta=" + std::to_string(row.b) + " threshold=" + to_string(row.threshold) +
                                        " matching(P u B)=" + std::to_string(row.matching),
                                    {{"kind", "finding"}, {"target", "reduction-2b"}, {"points", points_to_json(inst.points)},
                                     {"blockers", points_to_json(B.blockers)}}});
        rep.rows.push_back(row);
    }
    return rep;
}

// -------------------------------------------------------------- checking

struct CheckResult {
    bool ok = false;
    std::string message;
};

inline bool rechecks(const Finding& f);

/// Re-verifies a certificate from its JSON alone.
inline CheckResult check_certificate(const json& cert) {
    try {
        std::string kind = cert.value("kind", std::string(cert.contains("edges") && cert.contains("n") ? "graph" : ""));
        auto points = [&] { return point_set_from_json(cert).points; };
        if (kind == "graph") {
            auto pts = points();
            require_general_position(pts);
            auto g = build_fast(pts);
            auto edges = edges_from_json(cert);
            bool same = edges.size() == g.edges.size();
            for (std::size_t i = 0; same && i < edges.size(); ++i) {
                const Edge& a = edges[i];
                const Edge& b = g.edges[i];
                same = a.u == b.u && a.v == b.v && a.up == b.up && a.down == b.down;
            }
            return {same, same ? "edge set reproduced (" + std::to_string(edges.size()) + " edges)" : "edge set differs"};
        }
        if (kind == "matching") {
            auto pts = points();
            auto g = build_fast(pts);
            std::set<int> used;
            int size = 0;
            for (const auto& e : cert.at("edges")) {
                int u = e.at(0).get<int>(), v = e.at(1).get<int>();
                if (!g.has_edge(u, v)) return {false, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge"};
                if (!used.insert(u).second || !used.insert(v).second) return {false, "edges share a vertex"};
                ++size;
            }
            std::string msg = "valid matching of size " + std::to_string(size);
            if (cert.contains("tutte")) {
                auto w = evaluate_tutte_set(g.graph(), cert.at("tutte").at("S").get<std::vector<int>>());
                if (w.deficiency != static_cast<int>(pts.size()) - 2 * size) return {false, msg + ", Tutte set does not certify maximality"};
                msg += ", maximum (Tutte set deficiency " + std::to_string(w.deficiency) + ")";
            }
            return {true, msg};
        }
        if (kind == "blocking") {
            auto pts = points();
            auto B = points_from_tri(cert.at("blockers"));
            auto chk = verify_blocking(pts, B);
            if (!chk.ok()) return {false, chk.failure};
            std::string msg = "blocks all " + std::to_string(introducing_triangles(pts).size()) + " triangles with " +
                              std::to_string(B.size()) + " points";
            if (cert.value("exact", false)) {
                auto best = min_blocking_set(pts, Solver::exact).size();
                if (best != B.size()) return {false, msg + ", but the minimum is " + std::to_string(best)};
                msg += ", minimum";
            }
            return {true, msg};
        }
        if (kind == "family") {
            auto pts = points();
            auto fam = family_from_json(cert.at("family"));
            bool ok = valid_family(pts, fam);
            return {ok, ok ? "valid family of " + std::to_string(fam.triangles.size()) + " triangles" : "family invalid"};
        }
        if (kind == "finding") {
            Finding f{cert.at("target").get<std::string>(), "", "", cert};
            bool ok = rechecks(f);
            return {ok, ok ? "finding " + f.target + " reproduced" : "finding " + f.target + " not reproduced"};
        }
        if (kind == "claim-failure") {
            NamedSet inst;
            auto ps = point_set_from_json(cert.at("instance"));
            inst.points = ps.points;
            inst.subset = ps.subset;
            inst.name = cert.at("instance").value("name", std::string("certificate"));
            std::string claim = cert.at("claim").get<std::string>();
            auto rep = evaluate_instance(inst, {claim}, Budget{}, 0);
            bool failed = std::any_of(rep.results.begin(), rep.results.end(), [](const ClaimResult& r) { return r.status == Status::fail; });
            return {failed, failed ? "claim " + claim + " fails again" : "claim " + claim + " passes on re-evaluation"};
        }
        return {false, "unknown certificate kind '" + kind + "'"};
    } catch (const std::exception& e) {
        return {false, std::string("malformed certificate: ") + e.what()};
    }
}

inline bool rechecks(const Finding& f) {
    const json& c = f.certificate;
    auto pts = points_from_tri(c.at("points"));
    const int n = static_cast<int>(pts.size());
    if (f.target == "conj1") {
        auto G = build_fast(pts).graph();
        auto w = evaluate_tutte_set(G, c.at("tutte").at("S").get<std::vector<int>>());
        return n - w.deficiency < 2 * detail::ceil_div(n - 1, 2);  // mu <= (n - def)/2
    }
    if (f.target == "conj2" || f.target == "beta-3n/4") {
        auto B = points_from_tri(c.at("blockers"));
        if (!verify_blocking(pts, B).ok()) return false;
        int b = static_cast<int>(B.size());
        return f.target == "conj2" ? b < n - 1 : 4 * b < 3 * n - 8;
    }
    if (f.target == "lemma4-strong") {
        auto s = c.at("subset").get<std::vector<bool>>();
        auto up = induced_face_profile(pts, s, Orientation::up, false);
        auto down = induced_face_profile(pts, s, Orientation::down, false);
        return up.f3 > down.f5plus || down.f3 > up.f5plus;
    }
    if (f.target == "t2a-instance") {
        auto g = build_fast(pts);
        int mu = static_cast<int>(max_matching(g.graph()).size());
        if (c.contains("family")) {
            auto fam = family_from_json(c.at("family"));
            if (valid_family(pts, fam) && static_cast<int>(fam.triangles.size()) > 2 * mu) return true;
        }
        return static_cast<int>(min_blocking_set(pts, Solver::exact).size()) > 2 * mu;
    }
    if (f.target == "reduction-2b") {
        auto B = points_from_tri(c.at("blockers"));
        return verify_blocking(pts, B).ok();
    }
    return false;
}

// ---------------------------------------------------------------- search

enum class SearchTarget { conj1, conj2, lemma4_strong };

struct SearchReport {
    SearchTarget target = SearchTarget::conj1;
    long instances = 0;
    std::vector<Finding> findings;
    long unverified = 0;  // reported findings whose certificate failed to re-check (should stay 0)
};

/// Randomized search with short local perturbation runs. Every finding is
/// re-verified from its certificate before it is reported.
inline SearchReport search_counterexamples(SearchTarget target, long budget, std::uint64_t seed, int max_n = 12,
                                           std::size_t max_findings = 5) {
    SearchReport rep;
    rep.target = target;
    std::mt19937_64 rng(seed);
    const int lo = target == SearchTarget::lemma4_strong ? 4 : 3;
    const int hi = target == SearchTarget::conj2 ? std::min(max_n, 9) : max_n;
    auto random_set = [&](int n) {
        return gen_uniform(n, rng()).points;
    };
    // slack < 0 means a finding; lower is closer.
    auto evaluate = [&](const std::vector<Point>& pts, json& cert) -> int {
        const int n = static_cast<int>(pts.size());
        if (target == SearchTarget::conj1) {
            auto G = build_fast(pts).graph();
            int mu = static_cast<int>(max_matching(G).size());
            int slack = mu - detail::ceil_div(n - 1, 2);
            if (slack < 0) cert = {{"tutte", tutte_to_json(gallai_edmonds_witness(G))}};
            return slack;
        }
        if (target == SearchTarget::conj2) {
            if (introducing_triangles(pts).size() > kMaxExactBlocking) return 1;
            auto B = min_blocking_set(pts, Solver::exact);
            int slack = static_cast<int>(B.size()) - (n - 1);
            if (slack < 0) cert = {{"blockers", points_to_json(B.blockers)}};
            return slack;
        }
        int best = 1 << 20;
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<bool> s(static_cast<std::size_t>(n));
            for (auto&& x : s) x = rng() % 4 != 0;
            auto up = induced_face_profile(pts, s, Orientation::up, false);
            auto down = induced_face_profile(pts, s, Orientation::down, false);
            int slack = std::min(down.f5plus - up.f3, up.f5plus - down.f3);
            if (slack < best) {
                best = slack;
                if (slack < 0) cert = {{"subset", s}};
            }
        }
        return best;
    };
    auto report = [&](const std::vector<Point>& pts, json cert, const std::string& label) {
        cert["kind"] = "finding";
        cert["target"] = target == SearchTarget::conj1 ? "conj1" : target == SearchTarget::conj2 ? "conj2" : "lemma4-strong";
        cert["points"] = points_to_json(pts);
        Finding f{cert["target"].get<std::string>(), label, "", cert};
        if (!rechecks(f)) {
            ++rep.unverified;
            return;
        }
        f.detail = "n=" + std::to_string(pts.size());
        rep.findings.push_back(std::move(f));
    };
    // The figure instance is a known lemma4-strong witness; start from it.
    if (target == SearchTarget::lemma4_strong && budget > 0) {
        auto fig = gen_fig3();
        report(fig.points, {{"subset", fig.subset}}, "fig3");
        ++rep.instances;
    }
    while (rep.instances < budget && rep.findings.size() < max_findings) {
        int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
        auto pts = random_set(n);
        json cert;
        int slack = evaluate(pts, cert);
        ++rep.instances;
        // Local perturbation: nudge single points while the slack does not grow.
        for (int step = 0; step < 8 && slack >= 0 && rep.instances < budget; ++step) {
            auto trial = pts;
            auto& p = trial[rng() % trial.size()];
            Scalar d0(static_cast<long>(rng() % 2001) - 1000, 20000), d1(static_cast<long>(rng() % 2001) - 1000, 20000);
            p = Point(p[0] + d0, p[1] + d1);
            if (general_position(trial)) continue;
            json c2;
            int s2 = evaluate(trial, c2);
            ++rep.instances;
            if (s2 <= slack) {
                pts = std::move(trial);
                slack = s2;
                cert = std::move(c2);
            }
        }
        if (slack < 0) report(pts, cert, "search#" + std::to_string(rep.instances));
    }
    return rep;
}

}  // namespace theta6
