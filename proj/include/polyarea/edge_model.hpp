#pragma once

#include <memory>
#include <optional>

#include "polyarea/bnc.hpp"
#include "polyarea/instance.hpp"
#include "polyarea/oracle.hpp"

namespace polyarea {
namespace edge_model {

/// Variable layout of the edge-based formulation: one binary per directed
/// half-edge, with hull chords removed. Coefficients are exact twice-areas
/// w.r.t. the reference point (instance point 0).
struct EdgeVars {
    Instance inst;
    std::vector<int> hull;                       // CCW hull indices
    std::vector<std::pair<int, int>> var_edge;   // var id -> (tail, head)
    std::vector<std::vector<int>> var_id;        // [i][j] -> var id, -1 if removed
    std::vector<TwiceArea> coef;                 // f_e per var
    std::vector<std::pair<int, int>> undirected; // candidate pairs, i < j

    int id(int i, int j) const { return var_id[i][j]; }
};

EdgeVars build_vars(const Instance& inst);

/// In/out degree and half-edge pairing rows.
std::vector<lp::Row> degree_and_pairing_rows(const EdgeVars& v);

/// Slab prefix rows: per slab and prefix length m, the alternation sum of
/// (left-to-right minus right-to-left) half-edges is constrained to [0, 1].
/// Each row carries both bounds as a range.
std::vector<lp::Row> slab_prefix_rows(const EdgeVars& v);

/// All pairwise crossing constraints z_ij + z_ji + z_kl + z_lk <= 1 (static,
/// preset V1 only).
std::vector<lp::Row> static_intersection_rows(const EdgeVars& v);

/// Integral-trigger separators and branching fixings.
SeparationResult separate_subtours(const EdgeVars& v, const std::vector<double>& x);
SeparationResult separate_intersections(const EdgeVars& v, const std::vector<double>& x);
SeparationResult branch_fixings(const EdgeVars& v, int var, const std::vector<int>& fix_state);
SeparationResult separate_fractional(const EdgeVars& v, const std::vector<double>& x);

/// Decodes a subtour-free integral assignment into the polygonization it
/// selects; exact twice-area plus CCW vertex order.
std::optional<std::pair<TwiceArea, std::vector<int>>> extract_polygon(
    const EdgeVars& v, const std::vector<double>& x);

/// Characteristic vector of a polygonization's CCW directed edges (test and
/// warm-start support).
std::vector<double> characteristic_vector(const EdgeVars& v, const std::vector<int>& order);

struct BuiltModel {
    std::shared_ptr<EdgeVars> vars;
    Model model;
    std::vector<Separator> separators;
};

/// Presets "edge-v1".."edge-v4": V1 static intersections, V2 lazy clique cuts,
/// V3 adds branching fixings, V4 adds fractional min-cut subtour separation.
/// orientation_fallback adds the global row sum(f_e z_e) >= 0 (safety net for
/// forcing the CCW orientation; the slab rows already imply it).
BuiltModel build(const Instance& inst, oracle::Objective obj, int version,
                 bool orientation_fallback = false);

}  // namespace edge_model
}  // namespace polyarea
