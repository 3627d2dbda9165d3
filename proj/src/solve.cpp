#include "polyarea/solve.hpp"

#include <stdexcept>

#include "polyarea/edge_model.hpp"
#include "polyarea/heuristics.hpp"
#include "polyarea/tri_model.hpp"

namespace polyarea {

std::optional<Preset> parse_preset(const std::string& id) {
    auto make = [&](Preset::Family f, int max_v) -> std::optional<Preset> {
        const std::string prefix = (f == Preset::Family::Edge) ? "edge-v" : "tri-v";
        if (id.size() != prefix.size() + 1 || id.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        const char c = id.back();
        if (c < '1' || c > '0' + max_v) return std::nullopt;
        return Preset{f, c - '0', id};
    };
    if (auto p = make(Preset::Family::Edge, 4)) return p;
    return make(Preset::Family::Tri, 3);
}

Preset default_preset(oracle::Objective obj) {
    return obj == oracle::Objective::Max ? *parse_preset("edge-v3") : *parse_preset("tri-v3");
}

SolveOutcome solve_instance(const Instance& inst, oracle::Objective obj,
                            const SolveOptions& options) {
    const Preset preset = options.preset ? *options.preset : default_preset(obj);

    std::optional<WarmStart> warm;
    if (options.start_order) {
        auto poly = validate_polygonization(inst, *options.start_order);
        if (!poly) throw std::invalid_argument("warm-start order is not a simple polygonization");
        warm = WarmStart{poly->twice_area, poly->order};
    } else if (options.greedy_start) {
        const Polygonization poly = (obj == oracle::Objective::Min) ? greedy_min_area(inst)
                                                                    : greedy_max_area(inst);
        warm = WarmStart{poly.twice_area, poly.order};
    }

    SolveLimits limits;
    limits.time_s = options.time_limit_s;

    SolveResult result;
    if (preset.family == Preset::Family::Edge) {
        auto built = edge_model::build(inst, obj, preset.version);
        result = branch_and_cut(built.model, built.separators, warm, limits);
    } else {
        auto built = tri_model::build(inst, obj, preset.version);
        result = branch_and_cut(built.model, built.separators, warm, limits);
    }

    SolutionRecord rec;
    rec.instance_name = inst.name;
    rec.objective = (obj == oracle::Objective::Min) ? "min" : "max";
    rec.status = result.status;
    rec.preset = preset.id;
    rec.runtime_s = result.stats.wall_s;
    if (result.status != SolveStatus::Infeasible) {
        rec.order = result.incumbent_order;
        rec.twice_area = result.incumbent_value;
        rec.bound = result.bound;
        rec.gap = result.gap;
    }
    return SolveOutcome{std::move(result), std::move(rec), preset};
}

}  // namespace polyarea
