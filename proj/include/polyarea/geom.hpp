#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyarea {

using Coord = std::int64_t;
using TwiceArea = std::int64_t;

// Coordinates are bounded so that all cross products fit 128-bit intermediates.
inline constexpr Coord kCoordBound = Coord{1} << 30;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Sign of the cross product (b-a) x (c-a): +1 counterclockwise, 0 collinear, -1 clockwise.
int orient(const Point& a, const Point& b, const Point& c);

/// Twice the signed area of triangle (a, b, c); positive iff CCW.
TwiceArea twice_triangle_area(const Point& a, const Point& b, const Point& c);

/// Shoelace sum over a cyclic vertex sequence (|order| >= 3).
TwiceArea twice_signed_area(const std::vector<Point>& order);
TwiceArea twice_signed_area(const std::vector<Point>& pts, const std::vector<int>& order);

/// Signed coefficient f_e of the directed edge (i, j) w.r.t. a reference point:
/// twice the signed area of triangle (ref, pts[i], pts[j]). Antisymmetric in (i, j);
/// summed over the directed edges of any cyclic order it telescopes to the
/// polygon's twice signed area, independent of ref.
TwiceArea edge_coefficient(int i, int j, const Point& ref, const std::vector<Point>& pts);

/// True iff the closed segments ab and cd share a point that is not a shared
/// endpoint. Adjacent polygon edges (sharing one endpoint) do not count as
/// crossing; collinear overlap cannot occur in general position.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

enum class TriLocation { Inside, Boundary, Outside };

/// Classify p against the (non-degenerate) triangle abc.
TriLocation point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

/// Indices of hull vertices in CCW order (monotone chain). Requires >= 3 points
/// not all collinear; general-position inputs put every non-hull point strictly inside.
std::vector<int> convex_hull(const std::vector<Point>& pts);

struct EmptyTriangle {
    int a = 0, b = 0, c = 0;     // a < b < c
    TwiceArea twice_area = 0;    // always positive
};

/// All triangles on instance points whose closed region contains no other
/// instance point. Requires general position.
std::vector<EmptyTriangle> enumerate_empty_triangles(const std::vector<Point>& pts);

/// True iff the open interiors of two empty triangles (of the same point set)
/// intersect. Triangles sharing an edge conflict iff their apexes lie on the
/// same side of that edge.
bool triangles_conflict(const EmptyTriangle& t1, const EmptyTriangle& t2,
                        const std::vector<Point>& pts);

struct SlabEdge {
    int left = 0;   // endpoint with smaller x
    int right = 0;  // endpoint with larger x
};

struct Slab {
    Coord x_lo = 0;
    Coord x_hi = 0;
    std::vector<SlabEdge> edges;  // bottom-up at the slab midpoint
};

struct SlabStructure {
    std::vector<Coord> boundaries;  // ascending distinct x-coordinates
    std::vector<Slab> slabs;        // boundaries.size() - 1 entries
};

/// Vertical slabs between consecutive distinct x-coordinates. Each slab stores
/// the non-vertical candidate edges spanning its open x-interval, ordered
/// bottom-up by exact rational y at the slab midpoint.
SlabStructure build_slabs(const std::vector<Point>& pts,
                          const std::vector<std::pair<int, int>>& candidate_edges);

/// Interior angle of triangle t at its vertex s (one of t's corners), in (0, pi).
double interior_angle(const Point& s, const Point& u, const Point& v);

struct GeneralPositionReport {
    bool ok = true;
    bool duplicate = false;    // else collinear triple
    std::array<int, 3> indices{-1, -1, -1};
    std::string message;
};

/// ok iff no duplicate points and no three collinear; reports the first violation.
GeneralPositionReport validate_general_position(const std::vector<Point>& pts);

}  // namespace polyarea
