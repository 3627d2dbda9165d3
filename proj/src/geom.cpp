#include "polyarea/geom.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace polyarea {

using I128 = __int128;

namespace {

I128 cross(const Point& a, const Point& b, const Point& c) {
    return I128(b.x - a.x) * I128(c.y - a.y) - I128(b.y - a.y) * I128(c.x - a.x);
}

int sign(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
    // p collinear with ab assumed; checks the bounding box.
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) {
    return sign(cross(a, b, c));
}

TwiceArea twice_triangle_area(const Point& a, const Point& b, const Point& c) {
    return static_cast<TwiceArea>(cross(a, b, c));
}

TwiceArea twice_signed_area(const std::vector<Point>& order) {
    assert(order.size() >= 3);
    I128 sum = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Point& p = order[i];
        const Point& q = order[(i + 1) % order.size()];
        sum += I128(p.x) * q.y - I128(q.x) * p.y;
    }
    return static_cast<TwiceArea>(sum);
}

TwiceArea twice_signed_area(const std::vector<Point>& pts, const std::vector<int>& order) {
    assert(order.size() >= 3);
    I128 sum = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Point& p = pts[order[i]];
        const Point& q = pts[order[(i + 1) % order.size()]];
        sum += I128(p.x) * q.y - I128(q.x) * p.y;
    }
    return static_cast<TwiceArea>(sum);
}

TwiceArea edge_coefficient(int i, int j, const Point& ref, const std::vector<Point>& pts) {
    assert(i != j);
    return twice_triangle_area(ref, pts[i], pts[j]);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (a == c || a == d || b == c || b == d) return false;  // shared endpoint only

    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);

    if (o1 != o2 && o3 != o4) return true;  // proper crossing

    // Collinear contact (excluded by general position, handled for safety).
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

TriLocation point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    int oabc = orient(a, b, c);
    assert(oabc != 0);
    // Normalize to CCW.
    const Point& u = oabc > 0 ? b : c;
    const Point& v = oabc > 0 ? c : b;
    int s1 = orient(a, u, p);
    int s2 = orient(u, v, p);
    int s3 = orient(v, a, p);
    if (s1 > 0 && s2 > 0 && s3 > 0) return TriLocation::Inside;
    if (s1 < 0 || s2 < 0 || s3 < 0) return TriLocation::Outside;
    return TriLocation::Boundary;
}

std::vector<int> convex_hull(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    assert(n >= 3);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return pts[i].x != pts[j].x ? pts[i].x < pts[j].x : pts[i].y < pts[j].y;
    });

    std::vector<int> hull(2 * n);
    int k = 0;
    for (int ii = 0; ii < n; ++ii) {  // lower hull
        int i = idx[ii];
        while (k >= 2 && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    int lower = k + 1;
    for (int ii = n - 2; ii >= 0; --ii) {  // upper hull
        int i = idx[ii];
        while (k >= lower && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    assert(hull.size() >= 3);  // degenerate inputs rejected upstream
    return hull;
}

std::vector<EmptyTriangle> enumerate_empty_triangles(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<EmptyTriangle> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                TwiceArea area = twice_triangle_area(pts[a], pts[b], pts[c]);
                if (area == 0) continue;
                bool empty = true;
                for (int p = 0; p < n && empty; ++p) {
                    if (p == a || p == b || p == c) continue;
                    if (point_in_triangle(pts[p], pts[a], pts[b], pts[c]) !=
                        TriLocation::Outside) {
                        empty = false;
                    }
                }
                if (empty) out.push_back({a, b, c, std::llabs(area)});
            }
        }
    }
    return out;
}

bool triangles_conflict(const EmptyTriangle& t1, const EmptyTriangle& t2,
                        const std::vector<Point>& pts) {
    std::array<int, 3> v1{t1.a, t1.b, t1.c};
    std::array<int, 3> v2{t2.a, t2.b, t2.c};
    if (v1 == v2) return false;

    std::vector<int> shared;
    for (int u : v1)
        for (int w : v2)
            if (u == w) shared.push_back(u);

    if (shared.size() == 2) {
        // Common edge: conflict iff the two apexes lie on the same side of it.
        auto apex = [&](const std::array<int, 3>& v) {
            for (int u : v)
                if (u != shared[0] && u != shared[1]) return u;
            return -1;
        };
        int p1 = apex(v1), p2 = apex(v2);
        int s1 = orient(pts[shared[0]], pts[shared[1]], pts[p1]);
        int s2 = orient(pts[shared[0]], pts[shared[1]], pts[p2]);
        return s1 == s2;
    }

    // 0 or 1 shared vertex: proper edge crossing or vertex containment.
    std::array<std::pair<int, int>, 3> e1{{{t1.a, t1.b}, {t1.b, t1.c}, {t1.c, t1.a}}};
    std::array<std::pair<int, int>, 3> e2{{{t2.a, t2.b}, {t2.b, t2.c}, {t2.c, t2.a}}};
    for (auto [p, q] : e1)
        for (auto [r, s] : e2)
            if (segments_cross(pts[p], pts[q], pts[r], pts[s])) return true;

    for (int u : v1)
        if (point_in_triangle(pts[u], pts[t2.a], pts[t2.b], pts[t2.c]) == TriLocation::Inside)
            return true;
    for (int u : v2)
        if (point_in_triangle(pts[u], pts[t1.a], pts[t1.b], pts[t1.c]) == TriLocation::Inside)
            return true;
    return false;
}

SlabStructure build_slabs(const std::vector<Point>& pts,
                          const std::vector<std::pair<int, int>>& candidate_edges) {
    SlabStructure s;
    std::set<Coord> xs;
    for (const Point& p : pts) xs.insert(p.x);
    s.boundaries.assign(xs.begin(), xs.end());
    if (s.boundaries.size() < 2) return s;

    for (std::size_t k = 0; k + 1 < s.boundaries.size(); ++k) {
        Slab slab;
        slab.x_lo = s.boundaries[k];
        slab.x_hi = s.boundaries[k + 1];
        for (auto [i, j] : candidate_edges) {
            if (pts[i].x == pts[j].x) continue;  // vertical edges belong to no slab
            SlabEdge e = pts[i].x < pts[j].x ? SlabEdge{i, j} : SlabEdge{j, i};
            if (pts[e.left].x <= slab.x_lo && pts[e.right].x >= slab.x_hi) slab.edges.push_back(e);
        }
        // Order bottom-up by the exact rational y at the midpoint 2c = x_lo + x_hi.
        // y(c) = y_l + (y_r - y_l)(c - x_l) / (x_r - x_l); compared cross-multiplied.
        const I128 two_c = I128(slab.x_lo) + slab.x_hi;
        auto y_num_den = [&](const SlabEdge& e) {
            I128 xl = pts[e.left].x, yl = pts[e.left].y;
            I128 xr = pts[e.right].x, yr = pts[e.right].y;
            I128 den = 2 * (xr - xl);  // > 0
            I128 num = 2 * yl * (xr - xl) + (yr - yl) * (two_c - 2 * xl);
            return std::pair<I128, I128>(num, den);
        };
        std::sort(slab.edges.begin(), slab.edges.end(),
                  [&](const SlabEdge& a, const SlabEdge& b) {
                      auto [na, da] = y_num_den(a);
                      auto [nb, db] = y_num_den(b);
                      I128 lhs = na * db, rhs = nb * da;
                      if (lhs != rhs) return lhs < rhs;
                      return std::pair(a.left, a.right) < std::pair(b.left, b.right);
                  });
        s.slabs.push_back(std::move(slab));
    }
    return s;
}

double interior_angle(const Point& s, const Point& u, const Point& v) {
    double a1 = std::atan2(double(u.y - s.y), double(u.x - s.x));
    double a2 = std::atan2(double(v.y - s.y), double(v.x - s.x));
    double d = std::fabs(a1 - a2);
    if (d > M_PI) d = 2 * M_PI - d;
    return d;
}

GeneralPositionReport validate_general_position(const std::vector<Point>& pts) {
    GeneralPositionReport r;
    const int n = static_cast<int>(pts.size());

    std::map<std::pair<Coord, Coord>, int> seen;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = seen.emplace(std::pair(pts[i].x, pts[i].y), i);
        if (!fresh) {
            r.ok = false;
            r.duplicate = true;
            r.indices = {it->second, i, -1};
            std::ostringstream os;
            os << "duplicate points at indices " << it->second << " and " << i;
            r.message = os.str();
            return r;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (orient(pts[a], pts[b], pts[c]) == 0) {
                    r.ok = false;
                    r.indices = {a, b, c};
                    std::ostringstream os;
                    os << "collinear points at indices " << a << ", " << b << ", " << c;
                    r.message = os.str();
                    return r;
                }
    return r;
}

}  // namespace polyarea
