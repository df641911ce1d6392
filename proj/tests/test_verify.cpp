#include "support.hpp"
#include "theta6/verify.hpp"

#include <gtest/gtest.h>

using namespace theta6;

namespace {

std::set<std::string> every_claim() { return {all_claims().begin(), all_claims().end()}; }

}  // namespace

TEST(Verify, SmallSuitePasses) {
    auto rep = run_suite(uniform_family(0, 12, 3, 16), every_claim(), Budget{}, 0);
    EXPECT_EQ(rep.failures(), 0);
    EXPECT_EQ(rep.open_findings(), 0);
    EXPECT_EQ(rep.results.size(), 12 * all_claims().size());
}

TEST(Verify, GeneratorSuitePasses) {
    auto rep = run_suite(generator_family(), every_claim(), Budget{}, 0);
    EXPECT_EQ(rep.failures(), 0);
}

TEST(Verify, ParallelRunsAreIdentical) {
    auto fam = uniform_family(20, 8, 3, 12);
    auto a = run_suite(fam, {"T1", "T3", "L5"}, Budget{}, 5, 1);
    auto b = run_suite(fam, {"T1", "T3", "L5"}, Budget{}, 5, 3);
    ASSERT_EQ(a.results.size(), b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        EXPECT_EQ(a.results[i].instance, b.results[i].instance);
        EXPECT_EQ(a.results[i].detail, b.results[i].detail);
    }
}

TEST(Verify, PerInstanceBlockingCanExceedTwiceTheMatching) {
    // uniform(n=9, seed=6): beta = 9 > 2 mu = 8. Reported as a known observation.
    NamedSet inst{"u", gen_uniform(9, 6).points, {}};
    auto rep = evaluate_instance(inst, {"B1", "T2a"}, Budget{}, 0);
    for (const auto& r : rep.results) EXPECT_EQ(r.status, Status::pass) << r.claim;
    ASSERT_EQ(rep.findings.size(), 1u);
    EXPECT_EQ(rep.findings[0].target, "t2a-instance");
    EXPECT_TRUE(rep.findings[0].known);
    EXPECT_TRUE(check_certificate(rep.findings[0].certificate).ok);
}

TEST(Verify, CertificatesRecheckAndTamperingIsCaught) {
    auto pts = gen_fig1().points;
    auto g = build_fast(pts);
    json graph = graph_to_json(g);
    EXPECT_TRUE(check_certificate(graph).ok);
    graph["edges"].erase(0);
    EXPECT_FALSE(check_certificate(graph).ok);

    auto G = g.graph();
    json m = {{"kind", "matching"}, {"points", points_to_json(pts)}, {"edges", matching_to_json(max_matching(G))},
              {"tutte", tutte_to_json(gallai_edmonds_witness(G))}};
    EXPECT_TRUE(check_certificate(m).ok);
    m["edges"].erase(0);
    EXPECT_FALSE(check_certificate(m).ok);  // no longer maximum

    auto b = min_blocking_set(pts, Solver::exact);
    json bc = {{"kind", "blocking"}, {"points", points_to_json(pts)}, {"blockers", points_to_json(b.blockers)}, {"exact", true}};
    EXPECT_TRUE(check_certificate(bc).ok);
    bc["blockers"].erase(0);
    EXPECT_FALSE(check_certificate(bc).ok);

    EXPECT_FALSE(check_certificate(json{{"kind", "nonsense"}}).ok);
    EXPECT_FALSE(check_certificate(json{{"kind", "blocking"}}).ok);
}

TEST(Verify, ClaimFailureWitnessesAreReevaluated) {
    // A passing instance dressed up as a failure must not re-check.
    json fake = {{"kind", "claim-failure"}, {"claim", "T1"}, {"instance", point_set_to_json(gen_fig1().points)}};
    EXPECT_FALSE(check_certificate(fake).ok);
}

TEST(Verify, LemmaFourStrongSearchFindsTheFigure) {
    auto rep = search_counterexamples(SearchTarget::lemma4_strong, 1, 0);
    ASSERT_FALSE(rep.findings.empty());
    EXPECT_EQ(rep.findings[0].instance, "fig3");
    EXPECT_TRUE(check_certificate(rep.findings[0].certificate).ok);
    EXPECT_EQ(rep.unverified, 0);
}

TEST(Verify, ConjectureSearchesFindNothingSmall) {
    auto c1 = search_counterexamples(SearchTarget::conj1, 300, 1, 12);
    EXPECT_TRUE(c1.findings.empty());
    EXPECT_GE(c1.instances, 300);
    auto c2 = search_counterexamples(SearchTarget::conj2, 40, 1, 8);
    EXPECT_TRUE(c2.findings.empty());
}

TEST(Verify, SearchIsReproducible) {
    auto a = search_counterexamples(SearchTarget::lemma4_strong, 60, 3, 9);
    auto b = search_counterexamples(SearchTarget::lemma4_strong, 60, 3, 9);
    ASSERT_EQ(a.findings.size(), b.findings.size());
    for (std::size_t i = 0; i < a.findings.size(); ++i) EXPECT_EQ(a.findings[i].certificate, b.findings[i].certificate);
}

TEST(Verify, ReductionCountingStep) {
    std::vector<NamedSet> sets;
    for (std::uint64_t s = 0; s < 8; ++s) sets.push_back({"u" + std::to_string(s), gen_uniform(3 + static_cast<int>(s % 6), s).points, {}});
    sets.push_back({"single", {Point(Scalar(0), Scalar(0))}, {}});
    auto rep = check_reduction_2b(Scalar(3, 7), Scalar(-8, 7), sets);
    EXPECT_TRUE(rep.counting_ok());
    EXPECT_EQ(rep.rows.size(), sets.size());
    for (const auto& r : rep.rows) {
        EXPECT_TRUE(r.independent);
        EXPECT_LE(r.matching, r.b);
        EXPECT_TRUE(r.matching_bound) << r.instance;
    }
    EXPECT_EQ(check_reduction_2b(Scalar(3, 7), Scalar(-8, 7), {}).rows.size(), 0u);
    EXPECT_THROW(check_reduction_2b(Scalar(1), Scalar(0), sets), std::invalid_argument);
}

TEST(Verify, ReductionThresholds) {
    NamedSet s{"u", gen_uniform(8, 2).points, {}};
    auto a = check_reduction_2b(Scalar(3, 7), Scalar(-8, 7), {s});
    EXPECT_EQ(a.rows[0].threshold, Scalar(4));  // 3n/4 - 2
    auto b = check_reduction_2b(Scalar(1, 2), Scalar(-1, 2), {s});
    EXPECT_EQ(b.rows[0].threshold, Scalar(8 - 1));
}
