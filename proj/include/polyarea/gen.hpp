#pragma once

#include <cstdint>
#include <string>

#include "polyarea/instance.hpp"

namespace polyarea {

/// Uniform random instance: n distinct points with coordinates in [0, 10^6],
/// redrawn until the set is in general position. Deterministic in (n, seed).
Instance uniform_instance(int n, std::uint64_t seed, const std::string& name = "");

/// Random instance with exactly k hull points: k points in convex position
/// plus n - k points strictly inside their hull, redrawn until the full set is
/// in general position and its hull has exactly k vertices.
Instance convex_hull_size_instance(int n, int k, std::uint64_t seed,
                                   const std::string& name = "");

}  // namespace polyarea
