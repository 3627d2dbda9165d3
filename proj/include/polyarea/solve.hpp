#pragma once

#include <optional>
#include <string>

#include "polyarea/bnc.hpp"
#include "polyarea/instance.hpp"
#include "polyarea/oracle.hpp"

namespace polyarea {

struct Preset {
    enum class Family { Edge, Tri } family = Family::Edge;
    int version = 1;
    std::string id;  // canonical "edge-vK" / "tri-vK"
};

/// Parses "edge-v1".."edge-v4" and "tri-v1".."tri-v3".
std::optional<Preset> parse_preset(const std::string& id);

/// Default preset per objective: edge-based for max-area, triangle-based for
/// min-area.
Preset default_preset(oracle::Objective obj);

struct SolveOptions {
    std::optional<Preset> preset;          // default_preset(obj) when absent
    double time_limit_s = 1800.0;
    bool greedy_start = true;              // warm-start from the greedy heuristic
    std::optional<std::vector<int>> start_order;  // explicit warm-start polygon
};

struct SolveOutcome {
    SolveResult result;
    SolutionRecord record;
    Preset preset;
};

/// Builds the preset's model, wires the warm start, runs branch-and-cut and
/// assembles the solution record. Throws std::invalid_argument on a warm-start
/// order that is not a simple polygonization of the instance.
SolveOutcome solve_instance(const Instance& inst, oracle::Objective obj,
                            const SolveOptions& options = {});

}  // namespace polyarea
