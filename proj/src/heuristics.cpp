#include "polyarea/heuristics.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace polyarea {

namespace {

struct Carve {
    int point = -1;
    int edge = -1;
    TwiceArea area = 0;
};

struct CarveState {
    const Instance& inst;
    bool carve_max;
    std::vector<int> boundary;
    std::vector<char> placed;
    long budget = 5000;  // guards the backtracking fallback

    bool triangle_ok(int s1, int s2, int s3) const {
        const auto& pts = inst.points;
        // Empty w.r.t. all points not yet on the boundary.
        for (int p = 0; p < inst.n(); ++p) {
            if (placed[p] || p == s1) continue;
            if (point_in_triangle(pts[p], pts[s1], pts[s2], pts[s3]) != TriLocation::Outside)
                return false;
        }
        // The two new edges may not cross the current boundary.
        const int m = static_cast<int>(boundary.size());
        for (int i = 0; i < m; ++i) {
            const Point& a = pts[boundary[i]];
            const Point& b = pts[boundary[(i + 1) % m]];
            if (segments_cross(pts[s1], pts[s2], a, b)) return false;
            if (segments_cross(pts[s1], pts[s3], a, b)) return false;
        }
        return true;
    }

    std::vector<Carve> candidates() const {
        const auto& pts = inst.points;
        const int m = static_cast<int>(boundary.size());
        std::vector<Carve> cands;
        for (int s1 = 0; s1 < inst.n(); ++s1) {
            if (placed[s1]) continue;
            for (int e = 0; e < m; ++e) {
                const int s2 = boundary[e], s3 = boundary[(e + 1) % m];
                if (!triangle_ok(s1, s2, s3)) continue;
                cands.push_back(
                    {s1, e, std::llabs(twice_triangle_area(pts[s1], pts[s2], pts[s3]))});
            }
        }
        // Greedy preference: carve the largest (min-area) / smallest (max-area)
        // triangle first; ties by smallest (point index, edge position).
        std::sort(cands.begin(), cands.end(), [&](const Carve& a, const Carve& b) {
            if (a.area != b.area) return carve_max ? a.area > b.area : a.area < b.area;
            return std::pair{a.point, a.edge} < std::pair{b.point, b.edge};
        });
        return cands;
    }

    // Depth-first over carve choices in greedy preference order. The plain
    // greedy path is explored first; backtracking only kicks in on the rare
    // dead end where the remaining unplaced points block each other.
    bool run(int remaining) {
        if (remaining == 0) return true;
        for (const Carve& c : candidates()) {
            if (--budget < 0) return false;
            boundary.insert(boundary.begin() + c.edge + 1, c.point);
            placed[c.point] = 1;
            if (run(remaining - 1)) return true;
            placed[c.point] = 0;
            boundary.erase(boundary.begin() + c.edge + 1);
        }
        return false;
    }
};

// Always-feasible fallback: angular sort around the bottom-most point yields a
// star-shaped simple polygon (no angular ties under general position).
Polygonization star_polygonization(const Instance& inst) {
    const auto& pts = inst.points;
    int r = 0;
    for (int p = 1; p < inst.n(); ++p)
        if (std::pair{pts[p].y, pts[p].x} < std::pair{pts[r].y, pts[r].x}) r = p;
    std::vector<int> order;
    for (int p = 0; p < inst.n(); ++p)
        if (p != r) order.push_back(p);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return orient(pts[r], pts[a], pts[b]) > 0; });
    order.insert(order.begin(), r);
    auto poly = validate_polygonization(inst, order);
    assert(poly.has_value());
    return *poly;
}

Polygonization greedy_carve(const Instance& inst, bool carve_max) {
    CarveState st{inst, carve_max, convex_hull(inst.points),
                  std::vector<char>(inst.n(), 0)};
    for (int v : st.boundary) st.placed[v] = 1;
    if (!st.run(inst.n() - static_cast<int>(st.boundary.size())))
        return star_polygonization(inst);  // rare mutual-blocking dead end

    auto poly = validate_polygonization(inst, st.boundary);
    assert(poly.has_value());
    return *poly;
}

}  // namespace

Polygonization greedy_min_area(const Instance& inst) { return greedy_carve(inst, true); }
Polygonization greedy_max_area(const Instance& inst) { return greedy_carve(inst, false); }

}  // namespace polyarea
