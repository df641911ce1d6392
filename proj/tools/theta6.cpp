// theta6: command-line front end. JSON in (file or stdin), JSON/SVG out.
// Exit codes: 0 success, 1 claim or certificate failure, 2 usage or I/O
// error, 3 findings only.

#include "theta6/bounds.hpp"
#include "theta6/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

using namespace theta6;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_input(path));
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void write_json(const std::string& path, const json& j) { write_output(path, j.dump(2) + "\n"); }

PointSet read_points(const std::string& path) {
    PointSet ps = point_set_from_json(read_json(path));
    require_general_position(ps.points);
    return ps;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            auto v = std::stoull(s);
            return {v, v};
        }
        auto a = std::stoull(s.substr(0, dots)), b = std::stoull(s.substr(dots + 2));
        if (b < a) throw UsageError("empty seed range " + s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("seed range must look like a..b: " + s);
    }
}

json estimate_json(const Estimate& e) { return {{"lower", e.lower}, {"upper", e.upper}, {"status", e.tag()}}; }

json instance_doc(const Instance& inst) {
    json doc = point_set_to_json(inst.points, inst.subset);
    doc["provenance"] = provenance_to_json(inst.provenance);
    if (!inst.family.triangles.empty()) doc["family"] = family_to_json(inst.family);
    return doc;
}

Instance generate(const std::string& gen, int t, int n, std::uint64_t seed, unsigned precision) {
    auto need_n = [&] {
        if (n < 0) throw UsageError("generator " + gen + " needs --n");
        return n;
    };
    auto need_t = [&] {
        if (t < 0) throw UsageError("generator " + gen + " needs --t");
        return t;
    };
    if (gen == "vertical") return gen_vertical_line(need_n());
    if (gen == "uniform") return gen_uniform(need_n(), seed, precision);
    if (gen == "alpha-clusters") return gen_alpha_clusters(need_t());
    if (gen == "strong-clusters") return gen_strong_clusters(need_t());
    if (gen == "blocking-gadgets") return gen_blocking_gadgets(need_t());
    if (gen == "many-edges") return gen_many_edges(need_n());
    if (gen == "min-degree7") return gen_min_degree7();
    if (gen == "fig1") return gen_fig1();
    if (gen == "fig3") return gen_fig3();
    throw UsageError("unknown generator " + gen);
}

json profile_json(const FaceProfile& p) {
    json hist = json::object();
    for (const auto& [d, c] : p.histogram) hist[std::to_string(d)] = c;
    return {{"orientation", name(p.orientation)},
            {"components", p.components},
            {"representatives", p.representatives},
            {"face_degree", p.representative_degree},
            {"histogram", hist},
            {"f3", p.f3},
            {"f4plus", p.f4plus},
            {"f5plus", p.f5plus},
            {"max_components_per_face", p.max_components_per_face},
            {"degree_sum", p.degree_sum},
            {"vertex_count", p.vertex_count},
            {"degree_mismatches", p.degree_mismatches}};
}

json result_json(const ClaimResult& r) {
    json j = {{"claim", r.claim}, {"instance", r.instance}, {"status", name(r.status)}, {"detail", r.detail}};
    if (!r.witness.is_null()) j["witness"] = r.witness;
    return j;
}

json finding_json(const Finding& f) {
    return {{"target", f.target}, {"instance", f.instance}, {"detail", f.detail}, {"known", f.known}, {"certificate", f.certificate}};
}

std::set<std::string> parse_claims(const std::string& list) {
    std::set<std::string> out;
    if (list.empty() || list == "all") return {all_claims().begin(), all_claims().end()};
    std::stringstream ss(list);
    for (std::string id; std::getline(ss, id, ',');) {
        if (std::find(all_claims().begin(), all_claims().end(), id) == all_claims().end()) throw UsageError("unknown claim " + id);
        out.insert(id);
    }
    return out;
}

SearchTarget parse_target(const std::string& s) {
    if (s == "conj1") return SearchTarget::conj1;
    if (s == "conj2") return SearchTarget::conj2;
    if (s == "lemma4-strong") return SearchTarget::lemma4_strong;
    throw UsageError("unknown search target " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Theta_6-graphs with exact arithmetic: construction, matchings, blocking sets, claim checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "theta6 1.0");

    std::string in, out;
    auto io = [&](CLI::App* sub) {
        sub->add_option("input", in, "input JSON (stdin when omitted)");
        sub->add_option("-o,--out", out, "output path (stdout when omitted)");
    };
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point set");
    std::string gen_name;
    int gen_t = -1, gen_n = -1;
    std::uint64_t gen_seed = 0;
    unsigned gen_precision = kDefaultPrecision;
    gen->add_option("name", gen_name,
                    "vertical | uniform | alpha-clusters | strong-clusters | blocking-gadgets | many-edges | min-degree7 | fig1 | fig3")
        ->required();
    gen->add_option("--t", gen_t, "number of cluster copies / gadget repetitions");
    gen->add_option("--n", gen_n, "number of points");
    gen->add_option("--seed", gen_seed, "random seed (uniform)");
    gen->add_option("--precision", gen_precision, "digits of the sqrt(3) approximation (uniform)");
    gen->add_option("-o,--out", out, "output path (stdout when omitted)");
    gen->callback([&] { write_json(out, instance_doc(generate(gen_name, gen_t, gen_n, gen_seed, gen_precision))); });

    // build
    auto* build = app.add_subcommand("build", "build the Theta_6-graph");
    io(build);
    bool use_oracle = false, use_fast = false;
    std::string half;
    build->add_flag("--fast", use_fast, "sweep construction (default)");
    build->add_flag("--oracle", use_oracle, "brute-force emptiness oracle");
    build->add_option("--half", half, "only the up or down half-graph")->check(CLI::IsMember({"up", "down"}));
    build->callback([&] {
        auto ps = read_points(in);
        if (use_oracle && use_fast) throw UsageError("--fast and --oracle are exclusive");
        ProximityGraph g = !half.empty() ? build_half(ps.points, half == "up" ? Orientation::up : Orientation::down)
                           : use_oracle  ? build_by_oracle(ps.points)
                                         : build_fast(ps.points);
        write_json(out, graph_to_json(g));
    });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "summary of graph parameters and bounds");
    io(analyze);
    std::size_t exact_limit = kMaxExactBlocking;
    analyze->add_option("--exact-limit", exact_limit, "largest triangle count for the exact solvers");
    analyze->callback([&] {
        auto ps = read_points(in);
        auto r = bound_report(ps.points, {exact_limit, std::max(exact_limit, kMaxExactFamily)});
        write_json(out, {{"n", r.n},
                         {"edges", r.edges},
                         {"up_edges", r.up_edges},
                         {"down_edges", r.down_edges},
                         {"introducing_triangles", r.triangles},
                         {"min_degree", r.min_degree},
                         {"degeneracy", r.degeneracy},
                         {"greedy_colors", r.colors},
                         {"greedy_independent", r.independent},
                         {"matching", r.matching},
                         {"deficiency", r.deficiency},
                         {"blocking", estimate_json(r.blocking)},
                         {"alpha", estimate_json(r.alpha)},
                         {"strong_matching", estimate_json(r.strong)}});
    });

    // match
    auto* match = app.add_subcommand("match", "maximum matching with a Tutte-Berge certificate");
    io(match);
    match->callback([&] {
        auto ps = read_points(in);
        auto G = build_fast(ps.points).graph();
        auto m = max_matching(G);
        write_json(out, {{"kind", "matching"},
                         {"coords", "tri"},
                         {"points", points_to_json(ps.points)},
                         {"size", m.size()},
                         {"edges", matching_to_json(m)},
                         {"tutte", tutte_to_json(gallai_edmonds_witness(G))}});
    });

    // block
    auto* block = app.add_subcommand("block", "minimum blocking set");
    io(block);
    bool greedy = false;
    block->add_flag("--greedy", greedy, "greedy hitting set instead of branch and bound");
    block->callback([&] {
        auto ps = read_points(in);
        auto b = min_blocking_set(ps.points, greedy ? Solver::greedy : Solver::exact);
        write_json(out, {{"kind", "blocking"},
                         {"coords", "tri"},
                         {"points", points_to_json(ps.points)},
                         {"size", b.size()},
                         {"exact", b.exact},
                         {"blockers", points_to_json(b.blockers)}});
    });

    // alpha, strong
    for (auto [cmd, mode, help] : {std::tuple{"alpha", Mode::open, "maximum interior-disjoint family of introducing triangles"},
                                   std::tuple{"strong", Mode::closed, "maximum strong matching (closed-disjoint triangles)"}}) {
        auto* sub = app.add_subcommand(cmd, help);
        io(sub);
        sub->add_flag("--greedy", greedy, "greedy instead of branch and bound");
        sub->callback([&, mode = mode] {
            auto ps = read_points(in);
            auto fam = max_disjoint_triangles(ps.points, mode, greedy ? Solver::greedy : Solver::exact);
            write_json(out, {{"kind", "family"},
                             {"coords", "tri"},
                             {"points", points_to_json(ps.points)},
                             {"size", fam.triangles.size()},
                             {"family", family_to_json(fam)}});
        });
    }

    // faces
    auto* faces_cmd = app.add_subcommand("faces", "face profile of the components of G \\ S (S from the input's \"subset\")");
    io(faces_cmd);
    std::vector<int> subset_indices;
    faces_cmd->add_option("--subset", subset_indices, "indices of S (overrides the input)");
    faces_cmd->callback([&] {
        auto ps = read_points(in);
        std::vector<bool> s = ps.subset;
        if (!subset_indices.empty()) {
            s.assign(ps.points.size(), false);
            for (int v : subset_indices) {
                if (v < 0 || v >= static_cast<int>(ps.points.size())) throw UsageError("subset index out of range");
                s[static_cast<std::size_t>(v)] = true;
            }
        }
        if (s.empty()) throw UsageError("no subset: pass --subset or a \"subset\" array");
        write_json(out, {{"subset", s},
                         {"up", profile_json(induced_face_profile(ps.points, s, Orientation::up))},
                         {"down", profile_json(induced_face_profile(ps.points, s, Orientation::down))}});
    });

    // mst
    auto* mst = app.add_subcommand("mst", "minimum spanning tree under triangular distance");
    io(mst);
    mst->callback([&] {
        auto ps = read_points(in);
        auto t = mst_td(ps.points);
        json edges = json::array();
        for (const auto& [u, v] : t.edges) edges.push_back({u, v});
        write_json(out, {{"edges", edges}, {"weight", to_string(t.weight)}});
    });

    // verify
    auto* verify = app.add_subcommand("verify", "evaluate the claims on an instance suite, or search for counterexamples");
    std::string suite = "default", claims_list = "all", seeds = "0..99", report = "text", search, reduction, witness_dir = ".";
    long budget = -1;
    int jobs = 1, max_n = 12;
    verify->add_option("--suite", suite, "default (uniform + generators) | uniform | generators")
        ->check(CLI::IsMember({"default", "uniform", "generators"}));
    verify->add_option("--claims", claims_list, "comma-separated claim ids, or all");
    verify->add_option("--seeds", seeds, "seed range a..b for the uniform instances (n cycles through 3..30)");
    verify->add_option("--budget", budget, "sampled subsets per instance for L5, or instances for --search");
    verify->add_option("--report", report, "json | text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--search", search, "conj1 | conj2 | lemma4-strong: randomized counterexample search");
    verify->add_option("--max-n", max_n, "largest n for --search")->check(CLI::Range(3, 40));
    verify->add_option("--reduction", reduction, "c:d, replay the matching-to-blocking reduction on the suite (n <= 9)");
    verify->add_option("--witness-dir", witness_dir, "directory for failure witnesses");
    verify->add_option("-o,--out", out, "report path (stdout when omitted)");
    verify->callback([&] {
        json doc;
        std::ostringstream text;
        int failures = 0, open_findings = 0;
        std::vector<Finding> findings;
        if (!search.empty()) {
            auto rep = search_counterexamples(parse_target(search), budget < 0 ? 10000 : budget, parse_range(seeds).first, max_n);
            findings = rep.findings;
            failures = static_cast<int>(rep.unverified);
            doc = {{"target", search}, {"instances", rep.instances}, {"unverified", rep.unverified}};
            text << "search " << search << ": " << rep.instances << " instances, " << rep.findings.size() << " findings\n";
        } else {
            auto [lo, hi] = parse_range(seeds);
            std::vector<std::function<NamedSet()>> family;
            if (suite != "generators") family = uniform_family(lo, hi - lo + 1, 3, 30);
            if (suite != "uniform") {
                auto g = generator_family();
                family.insert(family.end(), g.begin(), g.end());
            }
            if (!reduction.empty()) {
                auto colon = reduction.find(':');
                if (colon == std::string::npos) throw UsageError("--reduction expects c:d");
                std::vector<NamedSet> sets;
                for (const auto& make : family) sets.push_back(make());
                auto rep = check_reduction_2b(parse_scalar(reduction.substr(0, colon)), parse_scalar(reduction.substr(colon + 1)), sets);
                findings = rep.findings;
                failures = rep.counting_ok() ? 0 : 1;
                json rows = json::array();
                for (const auto& r : rep.rows)
                    rows.push_back({{"instance", r.instance}, {"n", r.n}, {"beta", r.b}, {"matching", r.matching},
                                    {"independent", r.independent}, {"counting", r.counting}, {"matching_bound", r.matching_bound},
                                    {"threshold", to_string(r.threshold)}, {"derived", r.derived}});
                doc = {{"c", to_string(rep.c)}, {"d", to_string(rep.d)}, {"rows", rows}};
                text << "reduction c=" << to_string(rep.c) << " d=" << to_string(rep.d) << ": " << rep.rows.size()
                     << " instances, counting step " << (rep.counting_ok() ? "holds" : "FAILS") << "\n";
            } else {
                Budget b;
                if (budget >= 0) b.toughness_samples = static_cast<int>(budget);
                auto rep = run_suite(family, parse_claims(claims_list), b, lo, jobs);
                findings = rep.findings;
                failures = rep.failures();
                json results = json::array();
                std::map<std::string, std::array<int, 3>> tally;
                int witness_no = 0;
                for (const auto& r : rep.results) {
                    results.push_back(result_json(r));
                    ++tally[r.claim][static_cast<int>(r.status)];
                    if (r.status == Status::fail) {
                        std::string path = witness_dir + "/witness-" + r.claim + "-" + std::to_string(witness_no++) + ".json";
                        std::ofstream(path) << r.witness.dump(2) << "\n";
                        std::cerr << "FAIL " << r.claim << " on " << r.instance << ": " << r.detail << " (witness " << path << ")\n";
                    }
                }
                doc = {{"suite", suite}, {"seeds", seeds}, {"instances", family.size()}, {"results", results}};
                for (const auto& [claim, c] : tally)
                    text << claim << ": " << c[0] << " pass, " << c[1] << " fail, " << c[2] << " skipped\n";
            }
        }
        json fj = json::array();
        for (const auto& f : findings) {
            fj.push_back(finding_json(f));
            if (!f.known) ++open_findings;
            text << (f.known ? "note " : "FINDING ") << f.target << " on " << f.instance << ": " << f.detail << "\n";
        }
        doc["findings"] = fj;
        doc["summary"] = {{"failures", failures}, {"findings", open_findings}, {"known_observations", findings.size() - open_findings}};
        text << "failures: " << failures << ", findings: " << open_findings << "\n";
        if (report == "json")
            write_json(out, doc);
        else
            write_output(out, text.str());
        exit_code = failures > 0 ? 1 : open_findings > 0 ? 3 : 0;
    });

    // check
    auto* check = app.add_subcommand("check", "re-verify a certificate (matching, blocking, family, graph, finding, claim-failure)");
    io(check);
    check->callback([&] {
        json j = read_json(in);
        std::vector<json> certs;
        if (j.is_object() && j.contains("findings") && j["findings"].is_array()) {
            for (const auto& f : j["findings"]) certs.push_back(f.at("certificate"));
        } else {
            certs.push_back(j);
        }
        for (const auto& c : certs) {
            auto r = check_certificate(c);
            std::cerr << (r.ok ? "ok: " : "FAILED: ") << r.message << "\n";
            if (!r.ok) exit_code = 1;
        }
    });

    // render
    auto* render = app.add_subcommand("render", "SVG drawing of a point set or certificate");
    io(render);
    bool shade = false;
    std::vector<std::string> overlays;
    double size = 640;
    render->add_flag("--triangles", shade, "shade every introducing triangle");
    render->add_option("--overlay", overlays, "matching | blocking | family (computed unless present in the input)")
        ->check(CLI::IsMember({"matching", "blocking", "family"}));
    render->add_option("--size", size, "canvas size in pixels")->check(CLI::PositiveNumber);
    render->callback([&] {
        json j = read_json(in);
        auto ps = point_set_from_json(j);
        require_general_position(ps.points);
        auto g = build_fast(ps.points);
        RenderOptions opt;
        opt.triangles = shade;
        opt.size = size;
        for (const auto& o : overlays) {
            if (o == "matching") {
                if (j.contains("edges") && j.value("kind", "") == "matching")
                    for (const auto& e : j["edges"]) opt.matching.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
                else
                    opt.matching = max_matching(g.graph()).edges;
            } else if (o == "blocking") {
                opt.blockers = j.contains("blockers") ? points_from_tri(j["blockers"]) : min_blocking_set(ps.points, Solver::exact).blockers;
            } else {
                opt.family = j.contains("family") ? family_from_json(j["family"]).triangles
                                                  : max_disjoint_triangles(ps.points, Mode::open, Solver::exact).triangles;
            }
        }
        write_output(out, render_svg(g, opt));
    });

    // bench
    auto* bench = app.add_subcommand("bench", "time and count predicates: oracle vs sweep construction");
    int bench_n = 1000, reps = 1;
    std::uint64_t bench_seed = 0;
    bool skip_oracle = false;
    bench->add_option("--n", bench_n, "points per instance")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "first seed");
    bench->add_option("--reps", reps, "instances (seeds seed..seed+reps-1)")->check(CLI::PositiveNumber);
    bench->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    bench->add_flag("--no-oracle", skip_oracle, "time the sweep only");
    bench->add_option("-o,--out", out, "output path (stdout when omitted)");
    bench->callback([&] {
        std::vector<json> rows(static_cast<std::size_t>(reps));
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i; (i = next++) < reps;) {
                auto pts = gen_uniform(bench_n, bench_seed + static_cast<std::uint64_t>(i)).points;
                json row = {{"seed", bench_seed + static_cast<std::uint64_t>(i)}, {"n", bench_n}};
                auto run = [&](const char* label, auto&& build_fn) {
                    predicate_count = 0;
                    auto t0 = std::chrono::steady_clock::now();
                    auto g = build_fn(pts);
                    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    row[label] = {{"seconds", secs}, {"predicates", predicate_count}, {"edges", g.edges.size()}};
                    return g;
                };
                auto fast = run("fast", [](const auto& p) { return build_fast(p); });
                row["edges_per_point"] = static_cast<double>(fast.edges.size()) / bench_n;
                if (!skip_oracle) {
                    auto oracle = run("oracle", [](const auto& p) { return build_by_oracle(p); });
                    row["agree"] = oracle.edges == fast.edges;
                }
                rows[static_cast<std::size_t>(i)] = row;
            }
        };
        std::vector<std::thread> pool;
        for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        write_json(out, {{"runs", rows}});
        for (const auto& r : rows)
            if (r.contains("agree") && !r["agree"].get<bool>()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GeneralPositionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
