#pragma once

// Blocking sets: points that lie strictly inside every edge-introducing
// triangle, so that no two input points stay adjacent once they are added.

#include "theta6/bits.hpp"
#include "theta6/triangles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace theta6 {

struct BlockingSet {
    std::vector<Point> blockers;
    std::vector<std::vector<int>> covered;  // triangle indices strictly containing each blocker
    std::vector<IntroTriangle> triangles;   // the triangles that had to be hit
    bool exact = false;

    std::size_t size() const { return blockers.size(); }
};

inline constexpr std::size_t kMaxExactBlocking = 90;

namespace detail {

struct Candidate {
    Point point;
    Bits hits;
};

// Every introducing triangle has its sides on lines l_c = value through input
// points. One point per face of that line arrangement (next to each vertex,
// offset along the six cone bisectors) realises every hit pattern.
inline std::vector<Candidate> blocking_candidates(std::span<const Point> pts, const std::vector<IntroTriangle>& tris) {
    std::array<std::vector<Scalar>, 3> lines;
    for (std::size_t c = 0; c < 3; ++c) {
        for (const auto& p : pts) lines[c].push_back(p[c]);
        std::sort(lines[c].begin(), lines[c].end());
        lines[c].erase(std::unique(lines[c].begin(), lines[c].end()), lines[c].end());
    }
    // Gap from x to the nearest different value of one family.
    auto gap = [](const std::vector<Scalar>& vals, const Scalar& x) {
        std::optional<Scalar> g;
        auto it = std::lower_bound(vals.begin(), vals.end(), x);
        if (it != vals.end() && *it == x) ++it;
        if (it != vals.end()) g = *it - x;
        auto jt = std::lower_bound(vals.begin(), vals.end(), x);
        if (jt != vals.begin()) {
            Scalar d = x - *std::prev(jt);
            if (!g || d < *g) g = d;
        }
        return g;
    };
    static const std::array<std::array<int, 3>, 6> bisector{
        {{1, 1, -2}, {2, -1, -1}, {1, -2, 1}, {-1, -1, 2}, {-2, 1, 1}, {-1, 2, -1}}};
    std::map<Bits, Point> best;
    const std::size_t m = tris.size();
    for (std::size_t c1 = 0; c1 < 3; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < 3; ++c2)
            for (const Scalar& a : lines[c1])
                for (const Scalar& b : lines[c2]) {
                    std::array<Scalar, 3> v;
                    v[c1] = a;
                    v[c2] = b;
                    std::size_t c3 = 3 - c1 - c2;
                    v[c3] = -a - b;
                    std::optional<Scalar> delta;
                    for (std::size_t c = 0; c < 3; ++c)
                        if (auto g = gap(lines[c], v[c]); g && (!delta || *g < *delta)) delta = *g;
                    Scalar step = delta ? Scalar(*delta / 8) : Scalar(1);
                    for (const auto& dir : bisector) {
                        Point q = Point::from_tri(v[0] + dir[0] * step, v[1] + dir[1] * step, v[2] + dir[2] * step);
                        Bits hits(m);
                        for (std::size_t t = 0; t < m; ++t)
                            if (contains(tris[t].triangle, q, Mode::open)) hits.set(t);
                        if (hits.none()) continue;
                        best.try_emplace(std::move(hits), q);
                    }
                }
    // Drop patterns strictly contained in another one.
    std::vector<Candidate> all;
    for (auto& [hits, p] : best) all.push_back({p, hits});
    std::stable_sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) { return x.hits.count() > y.hits.count(); });
    std::vector<Candidate> kept;
    for (auto& cand : all) {
        bool dominated = false;
        for (const auto& k : kept)
            if (cand.hits.subset_of(k.hits)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(std::move(cand));
    }
    return kept;
}

class HittingSet {
public:
    HittingSet(const std::vector<Candidate>& cands, std::size_t triangles)
        : cands_(cands), m_(triangles), covering_(triangles, Bits(cands.size())) {
        for (std::size_t c = 0; c < cands_.size(); ++c) cands_[c].hits.for_each([&](std::size_t t) { covering_[t].set(c); });
    }

    std::vector<int> greedy() const {
        Bits open = all_triangles();
        std::vector<int> chosen;
        while (open.any()) {
            std::size_t best = 0, gain = 0;
            for (std::size_t c = 0; c < cands_.size(); ++c) {
                std::size_t g = cands_[c].hits.count_and(open);
                if (g > gain) {
                    gain = g;
                    best = c;
                }
            }
            if (gain == 0) throw std::logic_error("a triangle has no blocking candidate");
            chosen.push_back(static_cast<int>(best));
            open.subtract(cands_[best].hits);
        }
        return chosen;
    }

    std::vector<int> exact() {
        best_ = greedy();
        std::vector<int> current;
        search(all_triangles(), current);
        return best_;
    }

private:
    Bits all_triangles() const {
        Bits b(m_);
        for (std::size_t t = 0; t < m_; ++t) b.set(t);
        return b;
    }

    // Triangles whose candidate sets are pairwise disjoint each need their own blocker.
    std::size_t packing_bound(const Bits& open) const {
        std::vector<std::size_t> order;
        open.for_each([&](std::size_t t) { order.push_back(t); });
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return covering_[a].count() < covering_[b].count(); });
        Bits used(cands_.size());
        std::size_t count = 0;
        for (std::size_t t : order)
            if (!covering_[t].intersects(used)) {
                used |= covering_[t];
                ++count;
            }
        return count;
    }

    void search(const Bits& open, std::vector<int>& current) {
        if (open.none()) {
            if (current.size() < best_.size()) best_ = current;
            return;
        }
        if (current.size() + packing_bound(open) >= best_.size()) return;
        std::size_t pick = 0, fewest = cands_.size() + 1;
        open.for_each([&](std::size_t t) {
            std::size_t k = covering_[t].count();
            if (k < fewest) {
                fewest = k;
                pick = t;
            }
        });
        std::vector<std::size_t> options;
        covering_[pick].for_each([&](std::size_t c) { options.push_back(c); });
        std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
            return cands_[a].hits.count_and(open) > cands_[b].hits.count_and(open);
        });
        for (std::size_t c : options) {
            current.push_back(static_cast<int>(c));
            Bits next = open;
            next.subtract(cands_[c].hits);
            search(next, current);
            current.pop_back();
        }
    }

    std::vector<Candidate> cands_;
    std::size_t m_;
    std::vector<Bits> covering_;
    std::vector<int> best_;
};

inline Scalar min_coordinate_gap(std::span<const Point> pts) {
    std::optional<Scalar> gap;
    for (std::size_t c = 0; c < 3; ++c) {
        std::vector<Scalar> vals;
        for (const auto& p : pts) vals.push_back(p[c]);
        std::sort(vals.begin(), vals.end());
        for (std::size_t i = 0; i + 1 < vals.size(); ++i)
            if (vals[i + 1] != vals[i] && (!gap || vals[i + 1] - vals[i] < *gap)) gap = vals[i + 1] - vals[i];
    }
    return gap ? *gap : Scalar(1);
}

// A candidate sits at least g/8 from every line of its cell (g = smallest
// coordinate gap of P), so nudges below g/32 keep its hit pattern.
inline std::vector<Point> settle_blockers(std::span<const Point> pts, std::vector<Point> blockers) {
    const Scalar g = min_coordinate_gap(pts);
    const int n = static_cast<int>(pts.size());
    Scalar step = g / 64;  // total displacement stays below g/32
    for (int attempt = 0; attempt < 48; ++attempt) {
        std::vector<Point> all(pts.begin(), pts.end());
        all.insert(all.end(), blockers.begin(), blockers.end());
        auto bad = general_position(all);
        if (!bad) return blockers;
        int j = std::max(bad->first, bad->second) - n;
        if (j < 0) throw std::logic_error("input points are not in general position");
        auto& b = blockers[static_cast<std::size_t>(j)];
        step /= 2;
        b = Point(b[0] + step, b[1] + step / 3);
    }
    throw std::runtime_error("could not place blockers in general position");
}

}  // namespace detail

/// Minimum (exact) or max-coverage (greedy) set of points hitting the interior
/// of every introducing triangle of P. Blockers avoid P and keep P u B in
/// general position.
inline BlockingSet min_blocking_set(std::span<const Point> pts, Solver solver) {
    require_general_position(pts);
    BlockingSet out;
    out.triangles = introducing_triangles(pts);
    if (out.triangles.empty()) {
        out.exact = true;
        return out;
    }
    if (solver == Solver::exact && out.triangles.size() > kMaxExactBlocking)
        throw std::invalid_argument("too many triangles for the exact blocking solver");
    auto cands = detail::blocking_candidates(pts, out.triangles);
    detail::HittingSet hs(cands, out.triangles.size());
    std::vector<int> chosen = solver == Solver::exact ? hs.exact() : hs.greedy();
    out.exact = solver == Solver::exact;
    std::vector<Point> blockers;
    for (int c : chosen) blockers.push_back(cands[static_cast<std::size_t>(c)].point);
    out.blockers = detail::settle_blockers(pts, std::move(blockers));
    for (const auto& b : out.blockers) {
        std::vector<int> cov;
        for (std::size_t t = 0; t < out.triangles.size(); ++t)
            if (contains(out.triangles[t].triangle, b, Mode::open)) cov.push_back(static_cast<int>(t));
        out.covered.push_back(std::move(cov));
    }
    return out;
}

struct BlockingCheck {
    bool geometric = false;  // every introducing triangle holds a blocker in its interior
    bool rebuilt = false;    // the graph on P u B has no edge between two points of P
    std::string failure;

    bool ok() const { return geometric && rebuilt; }
};

inline BlockingCheck verify_blocking(std::span<const Point> pts, std::span<const Point> blockers) {
    BlockingCheck out;
    std::vector<Point> all(pts.begin(), pts.end());
    all.insert(all.end(), blockers.begin(), blockers.end());
    if (auto bad = general_position(all)) {
        out.failure = "points " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                      " share coordinate l" + std::to_string(bad->coordinate);
        return out;
    }
    out.geometric = true;
    for (const auto& t : introducing_triangles(pts)) {
        bool hit = std::any_of(blockers.begin(), blockers.end(), [&](const Point& b) { return contains(t.triangle, b, Mode::open); });
        if (!hit) {
            out.geometric = false;
            out.failure = std::string(name(t.triangle.orientation)) + "-triangle of (" + std::to_string(t.u) + "," +
                          std::to_string(t.v) + ") is not blocked";
            break;
        }
    }
    const int n = static_cast<int>(pts.size());
    out.rebuilt = true;
    for (const Edge& e : build_fast(all).edges)
        if (e.v < n) {
            out.rebuilt = false;
            if (out.failure.empty())
                out.failure = "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") survives";
            break;
        }
    return out;
}

struct Extension {
    std::vector<Point> points;
    std::vector<Point> blockers;
};

/// One step of the inductive construction: b is the rightmost corner of a
/// down-triangle strictly enclosing P u B, and the new point a1 sits in cone
/// C1 of b so that every triangle between a1 and P contains b.
inline Extension extend_with_blocker(std::span<const Point> pts, std::span<const Point> blockers) {
    if (pts.empty()) throw std::invalid_argument("extend_with_blocker needs at least one point");
    std::vector<Point> all(pts.begin(), pts.end());
    all.insert(all.end(), blockers.begin(), blockers.end());
    const Region r = bounding_region(all);
    Scalar scale = r.down.size() > 0 ? r.down.size() : Scalar(1);
    for (int attempt = 0;; ++attempt) {
        Scalar eps = scale * Scalar(8 + attempt, 64);
        Point b(r.down.t[0] + eps, r.down.t[1] + eps);
        Scalar delta = eps / 2;
        Point a1(b[0] + delta, b[1] + 2 * delta);
        Extension ext{std::vector<Point>(pts.begin(), pts.end()), std::vector<Point>(blockers.begin(), blockers.end())};
        ext.points.push_back(a1);
        ext.blockers.push_back(b);
        std::vector<Point> check = ext.points;
        check.insert(check.end(), ext.blockers.begin(), ext.blockers.end());
        if (!general_position(check)) return ext;
    }
}

/// Start from one point and extend n - 1 times: n points blocked by n - 1.
inline Extension blocker_chain(int n) {
    Extension ext{{Point(Scalar(0), Scalar(0))}, {}};
    for (int i = 1; i < n; ++i) ext = extend_with_blocker(ext.points, ext.blockers);
    return ext;
}

/// 2(n - 1) blockers: one just above every point but the topmost (kills the
/// down-triangles) and one just below every point but the bottommost.
inline std::vector<Point> vertical_blockers(std::span<const Point> pts) {
    require_general_position(pts);
    if (pts.size() < 2) return {};
    const Scalar gap = detail::min_coordinate_gap(pts);
    std::size_t top = 0, bottom = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i][0] > pts[top][0]) top = i;
        if (pts[i][0] < pts[bottom][0]) bottom = i;
    }
    for (int attempt = 0;; ++attempt) {
        Scalar eps = gap / (7 + attempt);
        std::vector<Point> out;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            // Vertical displacement by h changes the coordinates by (2h, -h, -h).
            Scalar h = eps * Scalar(static_cast<long>(3 * pts.size() + i), static_cast<long>(4 * pts.size()));
            if (i != top) out.push_back(Point(pts[i][0] + 2 * h, pts[i][1] - h));
            if (i != bottom) out.push_back(Point(pts[i][0] - 2 * h, pts[i][1] + h));
        }
        std::vector<Point> all(pts.begin(), pts.end());
        all.insert(all.end(), out.begin(), out.end());
        if (!general_position(all)) return out;
    }
}

}  // namespace theta6
