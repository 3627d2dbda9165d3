#pragma once

#include <memory>
#include <optional>

#include "polyarea/bnc.hpp"
#include "polyarea/cutgraph.hpp"
#include "polyarea/instance.hpp"
#include "polyarea/oracle.hpp"

namespace polyarea {
namespace tri_model {

/// Variable layout of the triangle-based formulation: one binary per empty
/// triangle, coefficient = its positive twice-area.
struct TriVars {
    Instance inst;
    std::vector<EmptyTriangle> tris;             // var id -> triangle
    std::vector<std::vector<int>> at_point;      // point -> var ids containing it
    std::vector<std::vector<int>> conflicts_of;  // var id -> conflicting var ids
    std::vector<std::vector<int>> dual_adj;      // var id -> edge-sharing var ids

    int n() const { return inst.n(); }
    int num_tris() const { return static_cast<int>(tris.size()); }
};

TriVars build_vars(const Instance& inst);

/// Count (= n-2), per-point coverage (>= 1), per-edge halfspace pairs (<= 1
/// each side) and hull-chord side equalities.
std::vector<lp::Row> static_rows(const TriVars& v);

/// Dual graph of the selected triangles: vertex per selected triangle, edge
/// between pairs sharing exactly two points. Returns the graph plus the
/// selected var ids in vertex order.
std::pair<CallbackGraph, std::vector<int>> dual_callback_graph(const TriVars& v,
                                                               const std::vector<double>& x);

SeparationResult separate_subtours(const TriVars& v, const std::vector<double>& x);
SeparationResult separate_intersections(const TriVars& v, const std::vector<double>& x);

/// Fans per point: selected triangles containing the point, grouped by their
/// component in the full dual callback graph.
std::vector<std::vector<std::vector<int>>> compute_triangle_fans(const TriVars& v,
                                                                 const std::vector<double>& x);

SeparationResult separate_angle_constraints(const TriVars& v, const std::vector<double>& x);
SeparationResult separate_point_subtours(const TriVars& v, const std::vector<double>& x);
SeparationResult branch_fixings(const TriVars& v, int var, const std::vector<int>& fix_state);

/// Decodes a conflict-free connected selection into the polygon bounded by the
/// union of its triangles.
std::optional<std::pair<TwiceArea, std::vector<int>>> extract_polygon(
    const TriVars& v, const std::vector<double>& x);

/// Characteristic vector of an ear-clipping triangulation of a polygonization
/// (test and warm-start support).
std::vector<double> triangulation_vector(const TriVars& v, const std::vector<int>& order);

struct BuiltModel {
    std::shared_ptr<TriVars> vars;
    Model model;
    std::vector<Separator> separators;
};

/// Presets "tri-v1".."tri-v3": V1 subtour + intersection cliques, V2 adds
/// angle constraints, V3 adds point-based subtours and branching fixings.
BuiltModel build(const Instance& inst, oracle::Objective obj, int version);

}  // namespace tri_model
}  // namespace polyarea
