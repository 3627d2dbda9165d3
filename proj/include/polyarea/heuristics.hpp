#pragma once

#include "polyarea/instance.hpp"

namespace polyarea {

/// Greedy carve heuristic: start from the convex hull and repeatedly replace a
/// boundary edge {s2,s3} by {s2,s1},{s1,s3} for an interior point s1 whose
/// triangle (s1,s2,s3) is empty of unplaced points, does not cross the current
/// boundary, and has maximum twice-area. Ties broken by smallest
/// (point index, edge position). Rare mutual-blocking dead ends are resolved by
/// limited backtracking; if that budget runs out, the always-feasible
/// star-shaped polygonization is returned instead.
Polygonization greedy_min_area(const Instance& inst);

/// Same carve loop but removing minimum twice-area triangles.
Polygonization greedy_max_area(const Instance& inst);

}  // namespace polyarea
