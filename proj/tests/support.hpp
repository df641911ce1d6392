#pragma once

#include "theta6/generators.hpp"

#include <random>
#include <vector>

namespace theta6::fixtures {

/// Small-integer point set in general position, drawn from [0, range)^2 in (l0, l1).
inline std::vector<Point> lattice_set(std::mt19937_64& rng, int n, long range = 64) {
    for (;;) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i)
            pts.emplace_back(Scalar(static_cast<long>(rng() % static_cast<std::uint64_t>(range))),
                             Scalar(static_cast<long>(rng() % static_cast<std::uint64_t>(range))));
        if (!general_position(pts)) return pts;
    }
}

inline std::vector<Point> uniform(int n, std::uint64_t seed) { return gen_uniform(n, seed).points; }

}  // namespace theta6::fixtures
