#pragma once

#include <functional>
#include <vector>

#include "polyarea/instance.hpp"

namespace polyarea {
namespace oracle {

inline constexpr int kDefaultMaxN = 10;

/// Enumerates every simple polygonization of a small instance exactly once,
/// canonicalized (index 0 first, CCW orientation). Backtracking over partial
/// orders with incremental crossing pruning. Refuses n > max_n.
void enumerate_polygonizations(const Instance& inst,
                               const std::function<void(const Polygonization&)>& emit,
                               int max_n = kDefaultMaxN);

std::vector<Polygonization> all_polygonizations(const Instance& inst,
                                                int max_n = kDefaultMaxN);

enum class Objective { Min, Max };

struct OracleOptimum {
    TwiceArea twice_area = 0;
    std::vector<int> order;
};

/// Exact optimum over the enumeration, with a witness order (ties broken by
/// canonical order, i.e. the first encountered in enumeration order).
OracleOptimum oracle_optimum(const Instance& inst, Objective obj, int max_n = kDefaultMaxN);

}  // namespace oracle
}  // namespace polyarea
