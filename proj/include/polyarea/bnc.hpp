#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyarea/instance.hpp"
#include "polyarea/lp.hpp"

namespace polyarea {

/// Binary IP model: every variable is 0/1 with an exact integer (twice-area)
/// objective coefficient. Constraints may be added lazily by separators.
struct Model {
    std::vector<TwiceArea> obj_coef;
    bool maximize = false;
    std::vector<lp::Row> constraints;
    std::vector<std::pair<int, int>> permanent_fixings;  // (var, 0/1)

    /// Converts a validated integral assignment into an exact-geometry-checked
    /// incumbent: exact objective value plus the witness vertex order. Returns
    /// nullopt if the assignment does not decode to a simple polygonization.
    std::function<std::optional<std::pair<TwiceArea, std::vector<int>>>(
        const std::vector<double>&)>
        extract_incumbent;

    int num_vars() const { return static_cast<int>(obj_coef.size()); }
};

enum class SepTrigger { Integral, Fractional, Branching };

struct SeparationResult {
    std::vector<lp::Row> cuts;
    std::vector<std::pair<int, int>> fixings;  // (var, value), node-local
    bool prune = false;
};

struct Separator {
    std::string name;
    SepTrigger trigger = SepTrigger::Integral;
    // Integral / fractional triggers: candidate assignment -> cuts.
    std::function<SeparationResult(const std::vector<double>&)> separate;
    // Branching trigger: (variable branched to 1, fixing state per variable
    // with -1 = free) -> extra fixings or a prune signal.
    std::function<SeparationResult(int, const std::vector<int>&)> on_branch;
};

struct SolveStats {
    long nodes = 0;
    long lp_iterations = 0;
    long lp_solves = 0;
    std::map<std::string, long> cuts_by_family;
    double wall_s = 0.0;

    long total_cuts() const;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<double> incumbent;      // 0/1 assignment (may be empty if the
                                        // warm start was never improved)
    std::vector<int> incumbent_order;   // witness polygonization
    TwiceArea incumbent_value = 0;
    TwiceArea bound = 0;
    double gap = 0.0;
    SolveStats stats;
};

struct WarmStart {
    TwiceArea value = 0;
    std::vector<int> order;
};

struct SolveLimits {
    double time_s = 1800.0;
    long nodes = -1;  // < 0: unlimited
};

/// CPLEX-convention optimality gap: |b - obj| / (1e-10 + |obj|).
double gap(double obj, double bound);

/// Rounds an LP relaxation value to a valid integer bound (all feasible
/// objective values are integral): min -> ceil(v - 1e-6), max -> floor(v + 1e-6).
TwiceArea safe_integer_bound(double lp_value, bool maximize);

/// Best-first branch-and-cut with lazy separation. Integral-trigger separators
/// run in the given order; the first family producing cuts forces a re-solve
/// before later families run. Branches on the most fractional variable.
SolveResult branch_and_cut(const Model& model, const std::vector<Separator>& separators,
                           const std::optional<WarmStart>& warm_start = std::nullopt,
                           const SolveLimits& limits = {});

}  // namespace polyarea
