#include "polyarea/tri_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace polyarea {
namespace tri_model {

namespace {

constexpr double kAngleGranularity = 1e-9;

double round_down(double v) { return std::floor(v / kAngleGranularity) * kAngleGranularity; }
double round_up(double v) { return std::ceil(v / kAngleGranularity) * kAngleGranularity; }

std::array<int, 3> corners(const EmptyTriangle& t) { return {t.a, t.b, t.c}; }

bool has_corner(const EmptyTriangle& t, int p) { return t.a == p || t.b == p || t.c == p; }

int shared_corners(const EmptyTriangle& s, const EmptyTriangle& t) {
    int k = 0;
    for (int p : corners(s))
        if (has_corner(t, p)) ++k;
    return k;
}

std::vector<int> selected_ids(const std::vector<double>& x) {
    std::vector<int> sel;
    for (int j = 0; j < static_cast<int>(x.size()); ++j)
        if (x[j] > 0.5) sel.push_back(j);
    return sel;
}

/// Edges of the union of a triangle set used by exactly one member, as
/// (min, max) vertex pairs.
std::map<std::pair<int, int>, int> edge_usage(const TriVars& v, const std::vector<int>& ids) {
    std::map<std::pair<int, int>, int> use;
    for (int id : ids) {
        const EmptyTriangle& t = v.tris[id];
        ++use[{t.a, t.b}];
        ++use[{t.a, t.c}];
        ++use[{t.b, t.c}];
    }
    return use;
}

/// Vertices strictly interior to the union of a triangle set: instance points
/// whose incident triangle angles sum to a full turn. (In general position an
/// interior vertex of the union must be a shared corner; it cannot lie inside
/// an empty triangle or on an edge.)
std::set<int> interior_vertices(const TriVars& v, const std::vector<int>& ids) {
    std::map<int, double> angle_sum;
    for (int id : ids) {
        const EmptyTriangle& t = v.tris[id];
        const auto& p = v.inst.points;
        angle_sum[t.a] += interior_angle(p[t.a], p[t.b], p[t.c]);
        angle_sum[t.b] += interior_angle(p[t.b], p[t.a], p[t.c]);
        angle_sum[t.c] += interior_angle(p[t.c], p[t.a], p[t.b]);
    }
    std::set<int> interior;
    for (const auto& [pt, sum] : angle_sum)
        if (sum > 2.0 * std::numbers::pi - 1e-6) interior.insert(pt);
    return interior;
}

/// Walks the boundary edges of a selection into a single cycle through all n
/// points; nullopt when the boundary is not such a cycle.
std::optional<std::vector<int>> boundary_cycle(const TriVars& v, const std::vector<int>& ids) {
    const int n = v.n();
    std::vector<std::vector<int>> nbr(n);
    for (const auto& [edge, count] : edge_usage(v, ids)) {
        if (count != 1) continue;
        nbr[edge.first].push_back(edge.second);
        nbr[edge.second].push_back(edge.first);
    }
    for (int p = 0; p < n; ++p)
        if (nbr[p].size() != 2) return std::nullopt;
    std::vector<int> order{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < n) {
        int next = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
        if (seen[next]) return std::nullopt;
        seen[next] = 1;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    // The walk must close back to the start.
    if (nbr[cur][0] != 0 && nbr[cur][1] != 0) return std::nullopt;
    return order;
}

/// Angular sector [start, start + span) of triangle t at its corner s,
/// counterclockwise. span is the interior angle.
struct Sector {
    double start = 0.0;
    double span = 0.0;
    double end() const { return start + span; }
};

double ccw_diff(double from, double to) {
    double d = std::fmod(to - from, 2.0 * std::numbers::pi);
    if (d < 0) d += 2.0 * std::numbers::pi;
    return d;
}

Sector sector_at(const TriVars& v, int tri_id, int s) {
    const EmptyTriangle& t = v.tris[tri_id];
    int u = -1, w = -1;
    for (int p : corners(t)) {
        if (p == s) continue;
        (u < 0 ? u : w) = p;
    }
    const auto& pts = v.inst.points;
    const double au = std::atan2(double(pts[u].y - pts[s].y), double(pts[u].x - pts[s].x));
    const double aw = std::atan2(double(pts[w].y - pts[s].y), double(pts[w].x - pts[s].x));
    const double span = interior_angle(pts[s], pts[u], pts[w]);
    // The sector runs CCW from one ray to the other; pick the start whose CCW
    // sweep of `span` reaches the other ray (span < pi makes this unique).
    if (std::fabs(ccw_diff(au, aw) - span) < std::fabs(ccw_diff(aw, au) - span))
        return {au, span};
    return {aw, span};
}

}  // namespace

TriVars build_vars(const Instance& inst) {
    TriVars v;
    v.inst = inst;
    v.tris = enumerate_empty_triangles(inst.points);
    const int m = v.num_tris();
    v.at_point.assign(inst.n(), {});
    for (int j = 0; j < m; ++j)
        for (int p : corners(v.tris[j])) v.at_point[p].push_back(j);
    v.conflicts_of.assign(m, {});
    v.dual_adj.assign(m, {});
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (shared_corners(v.tris[a], v.tris[b]) == 2) {
                v.dual_adj[a].push_back(b);
                v.dual_adj[b].push_back(a);
            }
            if (triangles_conflict(v.tris[a], v.tris[b], inst.points)) {
                v.conflicts_of[a].push_back(b);
                v.conflicts_of[b].push_back(a);
            }
        }
    }
    return v;
}

std::vector<lp::Row> static_rows(const TriVars& v) {
    const int n = v.n();
    std::vector<lp::Row> rows;

    lp::Row count;
    for (int j = 0; j < v.num_tris(); ++j) count.terms.push_back({j, 1.0});
    count.lo = count.hi = double(n - 2);
    rows.push_back(std::move(count));

    for (int p = 0; p < n; ++p) {
        lp::Row cover;
        for (int j : v.at_point[p]) cover.terms.push_back({j, 1.0});
        cover.lo = 1.0;
        rows.push_back(std::move(cover));
    }

    const std::vector<int> hull = convex_hull(v.inst.points);
    std::vector<int> hull_pos(n, -1);
    for (int k = 0; k < static_cast<int>(hull.size()); ++k) hull_pos[hull[k]] = k;
    auto is_hull_chord = [&](int i, int j) {
        if (hull_pos[i] < 0 || hull_pos[j] < 0) return false;
        const int h = static_cast<int>(hull.size());
        const int d = std::abs(hull_pos[i] - hull_pos[j]);
        return d != 1 && d != h - 1;  // non-adjacent hull vertices
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> plus, minus;
            for (int t : v.at_point[i]) {
                if (!has_corner(v.tris[t], j)) continue;
                int w = -1;
                for (int p : corners(v.tris[t]))
                    if (p != i && p != j) w = p;
                (orient(v.inst.points[i], v.inst.points[j], v.inst.points[w]) > 0 ? plus
                                                                                  : minus)
                    .push_back(t);
            }
            if (plus.empty() && minus.empty()) continue;
            for (const auto* side : {&plus, &minus}) {
                if (side->empty()) continue;
                lp::Row row;
                for (int t : *side) row.terms.push_back({t, 1.0});
                row.hi = 1.0;
                rows.push_back(std::move(row));
            }
            if (is_hull_chord(i, j)) {
                lp::Row eq;
                for (int t : plus) eq.terms.push_back({t, 1.0});
                for (int t : minus) eq.terms.push_back({t, -1.0});
                eq.lo = eq.hi = 0.0;
                rows.push_back(std::move(eq));
            }
        }
    }
    return rows;
}

std::pair<CallbackGraph, std::vector<int>> dual_callback_graph(const TriVars& v,
                                                               const std::vector<double>& x) {
    std::vector<int> sel = selected_ids(x);
    std::vector<int> pos(v.num_tris(), -1);
    for (int k = 0; k < static_cast<int>(sel.size()); ++k) pos[sel[k]] = k;
    CallbackGraph g(static_cast<int>(sel.size()));
    for (int k = 0; k < static_cast<int>(sel.size()); ++k)
        for (int other : v.dual_adj[sel[k]])
            if (pos[other] > k) g.add_edge(k, pos[other]);
    return {std::move(g), std::move(sel)};
}

SeparationResult separate_subtours(const TriVars& v, const std::vector<double>& x) {
    SeparationResult res;
    auto [g, sel] = dual_callback_graph(v, x);
    if (sel.empty()) return res;
    const auto comps = connected_components(g);
    const int n = v.n();

    for (const auto& comp : comps) {
        if (static_cast<int>(comp.size()) > n - 3) continue;
        std::vector<int> d_ids;
        for (int k : comp) d_ids.push_back(sel[k]);
        std::set<int> in_d(d_ids.begin(), d_ids.end());
        const std::set<int> interior = interior_vertices(v, d_ids);

        std::set<int> delta;
        for (const auto& [edge, count] : edge_usage(v, d_ids)) {
            if (count != 1) continue;
            for (int t : v.at_point[edge.first]) {
                if (in_d.count(t) || !has_corner(v.tris[t], edge.second)) continue;
                int w = -1;
                for (int p : corners(v.tris[t]))
                    if (p != edge.first && p != edge.second) w = p;
                if (!interior.count(w)) delta.insert(t);
            }
        }
        lp::Row cut;
        for (int t : d_ids) cut.terms.push_back({t, 1.0});
        for (int t : delta) cut.terms.push_back({t, -1.0});
        cut.hi = double(d_ids.size()) - 1.0;
        res.cuts.push_back(std::move(cut));
    }

    if (!res.cuts.empty()) return res;

    // Connected, but the union boundary may still fail to be a single cycle
    // through all points (a hole balanced by pinch vertices keeps the triangle
    // count at n-2). Such a selection is never part of a polygonization, so a
    // no-good cut on it is valid and guarantees progress. Leave conflicting
    // selections to the intersection separator.
    if (comps.size() == 1 && static_cast<int>(sel.size()) == n - 2 &&
        !boundary_cycle(v, sel)) {
        std::set<int> in_sel(sel.begin(), sel.end());
        bool conflicting = false;
        for (int t : sel)
            for (int c : v.conflicts_of[t])
                if (in_sel.count(c)) conflicting = true;
        if (!conflicting) {
            lp::Row cut;
            for (int t : sel) cut.terms.push_back({t, 1.0});
            cut.hi = double(sel.size()) - 1.0;
            res.cuts.push_back(std::move(cut));
        }
    }
    return res;
}

SeparationResult separate_intersections(const TriVars& v, const std::vector<double>& x) {
    SeparationResult res;
    const std::vector<int> sel = selected_ids(x);
    std::vector<int> all(v.num_tris());
    for (int j = 0; j < v.num_tris(); ++j) all[j] = j;
    auto conflicts = [&](int a, int b) {
        return triangles_conflict(v.tris[a], v.tris[b], v.inst.points);
    };

    std::set<std::pair<int, int>> covered;
    for (size_t i = 0; i < sel.size(); ++i) {
        for (size_t j = i + 1; j < sel.size(); ++j) {
            const std::pair<int, int> pr{sel[i], sel[j]};
            if (covered.count(pr) || !conflicts(pr.first, pr.second)) continue;
            const std::vector<int> clique = grow_maximal_clique(pr, sel, all, conflicts);
            for (size_t a = 0; a < clique.size(); ++a)
                for (size_t b = a + 1; b < clique.size(); ++b)
                    covered.insert({std::min(clique[a], clique[b]),
                                    std::max(clique[a], clique[b])});
            lp::Row cut;
            for (int t : clique) cut.terms.push_back({t, 1.0});
            cut.hi = 1.0;
            res.cuts.push_back(std::move(cut));
        }
    }
    return res;
}

std::vector<std::vector<std::vector<int>>> compute_triangle_fans(const TriVars& v,
                                                                 const std::vector<double>& x) {
    const int n = v.n();
    std::vector<std::vector<std::vector<int>>> fans(n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> at_s;
        for (int t : v.at_point[s])
            if (x[t] > 0.5) at_s.push_back(t);
        // Union-find style grouping by shared edges among the triangles at s.
        std::vector<int> group(at_s.size());
        for (size_t k = 0; k < at_s.size(); ++k) group[k] = static_cast<int>(k);
        std::function<int(int)> find = [&](int a) {
            return group[a] == a ? a : group[a] = find(group[a]);
        };
        for (size_t a = 0; a < at_s.size(); ++a)
            for (size_t b = a + 1; b < at_s.size(); ++b)
                if (shared_corners(v.tris[at_s[a]], v.tris[at_s[b]]) == 2)
                    group[find(static_cast<int>(a))] = find(static_cast<int>(b));
        std::map<int, std::vector<int>> by_root;
        for (size_t k = 0; k < at_s.size(); ++k) by_root[find(static_cast<int>(k))].push_back(at_s[k]);
        for (auto& [root, members] : by_root) fans[s].push_back(std::move(members));
    }
    return fans;
}

SeparationResult separate_angle_constraints(const TriVars& v, const std::vector<double>& x) {
    SeparationResult res;
    const auto fans = compute_triangle_fans(v, x);
    for (int s = 0; s < v.n(); ++s) {
        if (fans[s].size() < 2) continue;
        // Best pair across distinct fans: minimize |alpha_l - alpha_r|, ties by
        // summed twice-area, then by variable ids.
        int best_top = -1, best_bottom = -1;
        double best_diff = 0.0, best_min_gap = 0.0;
        TwiceArea best_area = 0;
        for (size_t fa = 0; fa < fans[s].size(); ++fa) {
            for (size_t fb = fa + 1; fb < fans[s].size(); ++fb) {
                for (int t1 : fans[s][fa]) {
                    for (int t2 : fans[s][fb]) {
                        const Sector s1 = sector_at(v, t1, s);
                        const Sector s2 = sector_at(v, t2, s);
                        const double a1 = ccw_diff(s1.end(), s2.start);
                        const double a2 = ccw_diff(s2.end(), s1.start);
                        const double diff = std::fabs(a1 - a2);
                        const TwiceArea area = v.tris[t1].twice_area + v.tris[t2].twice_area;
                        const std::pair<int, int> key{std::min(t1, t2), std::max(t1, t2)};
                        const std::pair<int, int> best_key{std::min(best_top, best_bottom),
                                                           std::max(best_top, best_bottom)};
                        if (best_top < 0 || diff < best_diff - 1e-12 ||
                            (std::fabs(diff - best_diff) <= 1e-12 &&
                             (area < best_area ||
                              (area == best_area && key < best_key)))) {
                            best_top = t1;
                            best_bottom = t2;
                            best_diff = diff;
                            best_min_gap = std::min(a1, a2);
                            best_area = area;
                        }
                    }
                }
            }
        }
        const double c = round_down(best_min_gap);
        if (c <= 0.0) continue;
        lp::Row cut;
        cut.terms.push_back({best_top, c});
        cut.terms.push_back({best_bottom, c});
        for (int t : v.at_point[s]) {
            if (t == best_top || t == best_bottom) continue;
            const EmptyTriangle& tr = v.tris[t];
            int u = -1, w = -1;
            for (int p : corners(tr)) {
                if (p == s) continue;
                (u < 0 ? u : w) = p;
            }
            const double beta =
                round_up(interior_angle(v.inst.points[s], v.inst.points[u], v.inst.points[w]));
            cut.terms.push_back({t, -beta});
        }
        cut.hi = c;
        res.cuts.push_back(std::move(cut));
    }
    return res;
}

SeparationResult separate_point_subtours(const TriVars& v, const std::vector<double>& x) {
    SeparationResult res;
    auto [g, sel] = dual_callback_graph(v, x);
    if (sel.empty()) return res;
    const int n = v.n();
    std::set<std::set<int>> emitted;
    for (const auto& comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) > n - 3) continue;
        std::set<int> xset;
        for (int k : comp)
            for (int p : corners(v.tris[sel[k]])) xset.insert(p);
        if (static_cast<int>(xset.size()) < 3 || static_cast<int>(xset.size()) > n - 2)
            continue;
        if (!emitted.insert(xset).second) continue;

        std::vector<int> dot, ddot;  // exactly one / exactly two corners in X
        for (int t = 0; t < v.num_tris(); ++t) {
            int k = 0;
            for (int p : corners(v.tris[t])) k += xset.count(p) ? 1 : 0;
            if (k == 1) dot.push_back(t);
            if (k == 2) ddot.push_back(t);
        }
        lp::Row two;  // Eq-style: at least two outgoing triangles
        for (int t : dot) two.terms.push_back({t, 1.0});
        for (int t : ddot) two.terms.push_back({t, 1.0});
        two.lo = 2.0;
        res.cuts.push_back(std::move(two));

        lp::Row deg;  // sum(dot) >= |X| - (|X|-1) sum(ddot)
        for (int t : dot) deg.terms.push_back({t, 1.0});
        for (int t : ddot) deg.terms.push_back({t, double(xset.size()) - 1.0});
        deg.lo = double(xset.size());
        res.cuts.push_back(std::move(deg));
    }
    return res;
}

SeparationResult branch_fixings(const TriVars& v, int var, const std::vector<int>& fix_state) {
    SeparationResult res;
    std::vector<int> state = fix_state;
    for (int c : v.conflicts_of[var]) {
        if (state[c] == 1) {
            res.prune = true;
            return res;
        }
        if (state[c] != 0) {
            res.fixings.emplace_back(c, 0);
            state[c] = 0;
        }
    }
    // Prune when the 1-fixed triangles can no longer be joined through
    // unexcluded candidates in the dual graph.
    std::vector<int> ones;
    for (int j = 0; j < v.num_tris(); ++j)
        if (state[j] == 1) ones.push_back(j);
    if (ones.size() >= 2) {
        std::vector<char> reach(v.num_tris(), 0);
        std::vector<int> stack{ones[0]};
        reach[ones[0]] = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : v.dual_adj[t]) {
                if (reach[u] || state[u] == 0) continue;
                reach[u] = 1;
                stack.push_back(u);
            }
        }
        for (int t : ones)
            if (!reach[t]) {
                res.prune = true;
                return res;
            }
    }
    return res;
}

std::optional<std::pair<TwiceArea, std::vector<int>>> extract_polygon(
    const TriVars& v, const std::vector<double>& x) {
    const std::vector<int> sel = selected_ids(x);
    if (static_cast<int>(sel.size()) != v.n() - 2) return std::nullopt;
    auto order = boundary_cycle(v, sel);
    if (!order) return std::nullopt;
    auto poly = validate_polygonization(v.inst, *order);
    if (!poly) return std::nullopt;
    if (poly->orientation == Orientation::CW) {
        std::reverse(order->begin() + 1, order->end());
    }
    return std::make_pair(poly->twice_area, *order);
}

std::vector<double> triangulation_vector(const TriVars& v, const std::vector<int>& order) {
    std::map<std::array<int, 3>, int> id_of;
    for (int j = 0; j < v.num_tris(); ++j)
        id_of[{v.tris[j].a, v.tris[j].b, v.tris[j].c}] = j;

    std::vector<int> poly = order;
    if (twice_signed_area(v.inst.points, poly) < 0)
        std::reverse(poly.begin() + 1, poly.end());

    std::vector<double> x(v.num_tris(), 0.0);
    const auto& pts = v.inst.points;
    while (poly.size() > 3) {
        const int m = static_cast<int>(poly.size());
        bool clipped = false;
        for (int k = 0; k < m && !clipped; ++k) {
            const int a = poly[(k + m - 1) % m], b = poly[k], c = poly[(k + 1) % m];
            if (orient(pts[a], pts[b], pts[c]) <= 0) continue;  // reflex corner
            bool empty = true;
            for (int q : poly) {
                if (q == a || q == b || q == c) continue;
                if (point_in_triangle(pts[q], pts[a], pts[b], pts[c]) != TriLocation::Outside) {
                    empty = false;
                    break;
                }
            }
            if (!empty) continue;
            std::array<int, 3> key{a, b, c};
            std::sort(key.begin(), key.end());
            const auto it = id_of.find(key);
            if (it == id_of.end())
                throw std::logic_error("ear of a valid polygonization must be an empty triangle");
            x[it->second] = 1.0;
            poly.erase(poly.begin() + k);
            clipped = true;
        }
        if (!clipped) throw std::logic_error("ear clipping stalled on a simple polygon");
    }
    std::array<int, 3> key{poly[0], poly[1], poly[2]};
    std::sort(key.begin(), key.end());
    x[id_of.at(key)] = 1.0;
    return x;
}

BuiltModel build(const Instance& inst, oracle::Objective obj, int version) {
    if (version < 1 || version > 3) throw std::invalid_argument("triangle preset version 1..3");
    BuiltModel built;
    built.vars = std::make_shared<TriVars>(build_vars(inst));
    const auto vars = built.vars;

    Model& m = built.model;
    m.maximize = (obj == oracle::Objective::Max);
    m.obj_coef.resize(vars->num_tris());
    for (int j = 0; j < vars->num_tris(); ++j) m.obj_coef[j] = vars->tris[j].twice_area;
    m.constraints = static_rows(*vars);
    m.extract_incumbent = [vars](const std::vector<double>& x) {
        return extract_polygon(*vars, x);
    };

    built.separators.push_back(Separator{
        "tri-subtour", SepTrigger::Integral,
        [vars](const std::vector<double>& x) { return separate_subtours(*vars, x); },
        nullptr});
    built.separators.push_back(Separator{
        "tri-clique", SepTrigger::Integral,
        [vars](const std::vector<double>& x) { return separate_intersections(*vars, x); },
        nullptr});
    if (version >= 2)
        built.separators.push_back(Separator{
            "tri-angle", SepTrigger::Integral,
            [vars](const std::vector<double>& x) { return separate_angle_constraints(*vars, x); },
            nullptr});
    if (version >= 3) {
        built.separators.push_back(Separator{
            "tri-point-subtour", SepTrigger::Integral,
            [vars](const std::vector<double>& x) { return separate_point_subtours(*vars, x); },
            nullptr});
        built.separators.push_back(Separator{
            "tri-branch-fix", SepTrigger::Branching, nullptr,
            [vars](int var, const std::vector<int>& fix_state) {
                return branch_fixings(*vars, var, fix_state);
            }});
    }
    return built;
}

}  // namespace tri_model
}  // namespace polyarea
