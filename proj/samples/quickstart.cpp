// Build the graph of a small point set, then compute a maximum matching
// and a minimum blocking set, each with its certificate check.

#include "theta6/theta6.hpp"

#include <iostream>

int main() {
    using namespace theta6;
    auto inst = gen_fig1();
    const auto& pts = inst.points;

    auto g = build_fast(pts);
    std::cout << pts.size() << " points, " << g.edges.size() << " edges\n";

    auto m = max_matching(g.graph());
    auto tutte = gallai_edmonds_witness(g.graph());
    std::cout << "matching " << m.size() << ", Tutte-Berge deficiency " << tutte.deficiency << "\n";

    auto b = min_blocking_set(pts, Solver::exact);
    auto check = verify_blocking(pts, b.blockers);
    std::cout << "blocking set " << b.size() << (check.ok() ? " (verified)" : " (INVALID)") << "\n";
    for (const auto& p : b.blockers) std::cout << "  " << to_string(p[0]) << ", " << to_string(p[1]) << "\n";
    return check.ok() ? 0 : 1;
}
