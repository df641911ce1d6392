#pragma once

// Points in triangular coordinates and equilateral triangles with a
// horizontal side.
//
// A point is stored as the values of three linear functionals whose level
// lines make angles of 0, 60 and 120 degrees with the horizontal:
//
//   l0 = y,   l1 = (sqrt3 * x - y) / 2,   l2 = -l0 - l1.
//
// In this basis every predicate the graphs need is a comparison of rationals.

#include "theta6/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace theta6 {

class GeneralPositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of exact point-in-triangle tests performed on this thread.
inline thread_local std::uint64_t predicate_count = 0;

struct Point {
    std::array<Scalar, 3> l;

    Point() : l{Scalar(0), Scalar(0), Scalar(0)} {}
    Point(Scalar l0, Scalar l1) : l{l0, l1, Scalar(-l0 - l1)} {}

    /// Validates l0 + l1 + l2 == 0.
    static Point from_tri(const Scalar& l0, const Scalar& l1, const Scalar& l2) {
        if (l0 + l1 + l2 != 0)
            throw std::invalid_argument("triangular coordinates must sum to zero");
        return Point(l0, l1);
    }

    const Scalar& operator[](int i) const { return l[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Point& a, const Point& b) { return a.l == b.l; }
};

/// Cartesian ingestion; the caller supplies one sqrt(3) approximation per data set.
inline Point from_cartesian(const Scalar& x, const Scalar& y, const Scalar& sqrt3) {
    Scalar l1 = (sqrt3 * x - y) / 2;
    return Point(y, l1);
}

inline Point from_cartesian(std::string_view x, std::string_view y, unsigned precision) {
    return from_cartesian(parse_scalar(x), parse_scalar(y), sqrt3_approx(precision));
}

/// Cartesian position as doubles (x = (2 l1 + l0) / sqrt3, y = l0), for rendering.
inline std::array<double, 2> cartesian(const Point& p) {
    constexpr double sqrt3 = 1.7320508075688772935;
    return {(2 * p[1].get_d() + p[0].get_d()) / sqrt3, p[0].get_d()};
}

enum class Orientation { up, down };

inline const char* name(Orientation o) { return o == Orientation::up ? "up" : "down"; }

/// Up-triangle  { r : l_i(r) >= t_i for all i },
/// down-triangle { r : l_i(r) <= t_i for all i }.
struct Triangle {
    Orientation orientation = Orientation::up;
    std::array<Scalar, 3> t{Scalar(0), Scalar(0), Scalar(0)};

    Scalar size() const {
        Scalar s = t[0] + t[1] + t[2];
        return orientation == Orientation::up ? Scalar(-s) : s;
    }

    /// The three corners, each the meeting point of two sides.
    std::array<Point, 3> corners() const {
        return {Point(t[0], t[1]), Point(t[0], Scalar(-t[0] - t[2])), Point(Scalar(-t[1] - t[2]), t[1])};
    }

    friend bool operator==(const Triangle& a, const Triangle& b) {
        return a.orientation == b.orientation && a.t == b.t;
    }
};

struct Region {
    Triangle up;
    Triangle down;
};

enum class Mode { open, closed };

/// Cone C1..C6 of `apex` containing q, counterclockwise, C1 spanning 0..60 degrees.
inline int cone_index(const Point& apex, const Point& q) {
    int sign[3];
    for (int i = 0; i < 3; ++i) {
        int c = cmp(q[i], apex[i]);
        if (c == 0) throw GeneralPositionError("points share coordinate l" + std::to_string(i));
        sign[i] = c > 0;
    }
    // (d0, d1, d2) sign patterns of the six cones.
    if (sign[0] && sign[1]) return 1;
    if (sign[0] && !sign[1] && !sign[2]) return 2;
    if (sign[0] && sign[2]) return 3;
    if (!sign[0] && !sign[1]) return 4;
    if (sign[1] && sign[2]) return 5;
    return 6;
}

inline bool is_up_cone(int cone) { return cone % 2 == 1; }

inline Triangle smallest_triangle(const Point& p, const Point& q, Orientation o) {
    Triangle t;
    t.orientation = o;
    for (std::size_t i = 0; i < 3; ++i)
        t.t[i] = o == Orientation::up ? (p.l[i] < q.l[i] ? p.l[i] : q.l[i])
                                      : (p.l[i] > q.l[i] ? p.l[i] : q.l[i]);
    return t;
}

inline bool contains(const Triangle& tri, const Point& r, Mode mode = Mode::open) {
    ++predicate_count;
    for (std::size_t i = 0; i < 3; ++i) {
        int c = cmp(r.l[i], tri.t[i]);
        if (tri.orientation == Orientation::down) c = -c;
        if (c < 0 || (c == 0 && mode == Mode::open)) return false;
    }
    return true;
}

/// The closed triangle `inner` lies in the closed triangle `outer`.
inline bool triangle_inside(const Triangle& inner, const Triangle& outer) {
    for (const Point& c : inner.corners())
        if (!contains(outer, c, Mode::closed)) return false;
    return true;
}

namespace detail {

// Intersection of the triangles as a box  lo_i <= l_i <= hi_i  on the plane
// sum l_i = 0; absent bounds are infinite.
inline bool triangles_meet(const Triangle& a, const Triangle& b, Mode mode) {
    std::array<std::optional<Scalar>, 3> lo, hi;
    for (const Triangle* t : {&a, &b}) {
        for (std::size_t i = 0; i < 3; ++i) {
            auto& bound = t->orientation == Orientation::up ? lo[i] : hi[i];
            if (!bound)
                bound = t->t[i];
            else if (t->orientation == Orientation::up ? t->t[i] > *bound : t->t[i] < *bound)
                bound = t->t[i];
        }
    }
    bool strict = mode == Mode::open;
    for (std::size_t i = 0; i < 3; ++i) {
        if (lo[i] && hi[i]) {
            int c = cmp(*lo[i], *hi[i]);
            if (c > 0 || (strict && c == 0)) return false;
        }
    }
    if (lo[0] && lo[1] && lo[2]) {
        int c = sgn(Scalar(*lo[0] + *lo[1] + *lo[2]));
        if (c > 0 || (strict && c == 0)) return false;
    }
    if (hi[0] && hi[1] && hi[2]) {
        int c = sgn(Scalar(*hi[0] + *hi[1] + *hi[2]));
        if (c < 0 || (strict && c == 0)) return false;
    }
    return true;
}

}  // namespace detail

inline bool interiors_disjoint(const Triangle& a, const Triangle& b) {
    return !detail::triangles_meet(a, b, Mode::open);
}

inline bool disjoint_closed(const Triangle& a, const Triangle& b) {
    return !detail::triangles_meet(a, b, Mode::closed);
}

struct PositionViolation {
    std::size_t first;
    std::size_t second;
    int coordinate;
};

/// Points are in general position when every pair differs in all three
/// coordinates. Returns the lexicographically smallest violating pair.
inline std::optional<PositionViolation> general_position(std::span<const Point> pts) {
    std::optional<PositionViolation> best;
    std::vector<std::size_t> order(pts.size());
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            int s = cmp(pts[a][c], pts[b][c]);
            return s < 0 || (s == 0 && a < b);
        });
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            if (pts[order[k]][c] != pts[order[k + 1]][c]) continue;
            // Within a run of equal values the first two indices are the smallest pair.
            PositionViolation v{order[k], order[k + 1], c};
            if (!best || std::pair(v.first, v.second) < std::pair(best->first, best->second)) best = v;
            while (k + 1 < order.size() && pts[order[k]][c] == pts[order[k + 1]][c]) ++k;
        }
    }
    return best;
}

inline void require_general_position(std::span<const Point> pts) {
    if (auto v = general_position(pts))
        throw GeneralPositionError("points " + std::to_string(v->first) + " and " +
                                   std::to_string(v->second) + " share coordinate l" +
                                   std::to_string(v->coordinate));
}

inline Region bounding_region(std::span<const Point> pts) {
    if (pts.empty()) throw std::invalid_argument("bounding_region of an empty point set");
    Region r;
    r.up.orientation = Orientation::up;
    r.down.orientation = Orientation::down;
    r.up.t = r.down.t = pts[0].l;
    for (const Point& p : pts) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (p.l[i] < r.up.t[i]) r.up.t[i] = p.l[i];
            if (p.l[i] > r.down.t[i]) r.down.t[i] = p.l[i];
        }
    }
    return r;
}

// Planar predicates. Vec2 is the image of a point under (x, y) -> (sqrt3 x, y),
// which keeps orientations and angular order and has rational coordinates.

struct Vec2 {
    Scalar u;
    Scalar v;
};

inline Vec2 planar(const Point& p) { return {Scalar(2 * p[1] + p[0]), p[0]}; }

inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return sgn(Scalar((b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u)));
}

/// c lies on the closed segment ab (a != b).
inline bool on_segment(const Vec2& a, const Vec2& b, const Vec2& c) {
    if (orient(a, b, c) != 0) return false;
    auto between = [](const Scalar& x, const Scalar& lo, const Scalar& hi) {
        return (lo <= x && x <= hi) || (hi <= x && x <= lo);
    };
    return between(c.u, a.u, b.u) && between(c.v, a.v, b.v);
}

/// Closed segments ab and cd share a point.
inline bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace theta6
