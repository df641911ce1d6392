#pragma once

// Six surrounding points a1..a6 placed just outside the union of the
// smallest enclosing up- and down-triangles, one beyond each corner, so that
// every input point sees a_i in its cone C_i.

#include "theta6/geometry.hpp"

#include <array>
#include <span>
#include <vector>

namespace theta6 {

struct AugmentedSet {
    std::vector<Point> base;
    std::array<Point, 6> surround;  // surround[i] is a_{i+1}

    /// base followed by a1..a6; a_i has index base.size() + i - 1.
    std::vector<Point> combined() const {
        std::vector<Point> all = base;
        all.insert(all.end(), surround.begin(), surround.end());
        return all;
    }
};

/// Places a_i beyond the corner of the enclosing triangle that lies in cone
/// C_{i+3} of every point, pushed outward by about size/8.
inline AugmentedSet augment(std::span<const Point> pts) {
    require_general_position(pts);
    Region region = bounding_region(pts);
    Scalar scale = region.up.size() > region.down.size() ? region.up.size() : region.down.size();
    if (scale == 0) scale = 1;
    const auto& lo = region.up.t;
    const auto& hi = region.down.t;

    AugmentedSet out{{pts.begin(), pts.end()}, {}};
    for (int attempt = 0;; ++attempt) {
        // Distinct offsets per corner keep the surround points in general position.
        std::array<Scalar, 6> eps;
        for (std::size_t i = 0; i < 6; ++i) {
            eps[i] = scale * Scalar(static_cast<long>(48 + 3 * i + attempt), 384);
        }
        auto from_l0_l2 = [](const Scalar& l0, const Scalar& l2) { return Point(l0, Scalar(-l0 - l2)); };
        auto from_l1_l2 = [](const Scalar& l1, const Scalar& l2) { return Point(Scalar(-l1 - l2), l1); };
        out.surround[0] = Point(hi[0] + eps[0], hi[1] + eps[0]);            // a1 in C1
        out.surround[1] = from_l1_l2(lo[1] - eps[1], lo[2] - eps[1]);       // a2 in C2
        out.surround[2] = from_l0_l2(hi[0] + eps[2], hi[2] + eps[2]);       // a3 in C3
        out.surround[3] = Point(lo[0] - eps[3], lo[1] - eps[3]);            // a4 in C4
        out.surround[4] = from_l1_l2(hi[1] + eps[4], hi[2] + eps[4]);       // a5 in C5
        out.surround[5] = from_l0_l2(lo[0] - eps[5], lo[2] - eps[5]);       // a6 in C6
        if (!general_position(out.combined())) return out;
    }
}

}  // namespace theta6
