#include "polyarea/edge_model.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "polyarea/cutgraph.hpp"

namespace polyarea {
namespace edge_model {

EdgeVars build_vars(const Instance& inst) {
    EdgeVars v;
    v.inst = inst;
    const int n = inst.n();
    const auto& pts = inst.points;
    v.hull = convex_hull(pts);

    // Hull chords (non-adjacent hull vertex pairs) can never lie on the
    // boundary; their variables are removed outright.
    const int h = static_cast<int>(v.hull.size());
    std::vector<int> hull_pos(n, -1);
    for (int k = 0; k < h; ++k) hull_pos[v.hull[k]] = k;
    auto is_chord = [&](int i, int j) {
        if (hull_pos[i] < 0 || hull_pos[j] < 0) return false;
        int d = std::abs(hull_pos[i] - hull_pos[j]);
        return d != 1 && d != h - 1;
    };

    v.var_id.assign(n, std::vector<int>(n, -1));
    const Point& ref = pts[0];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || is_chord(i, j)) continue;
            v.var_id[i][j] = static_cast<int>(v.var_edge.size());
            v.var_edge.emplace_back(i, j);
            v.coef.push_back(edge_coefficient(i, j, ref, pts));
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v.var_id[i][j] >= 0) v.undirected.emplace_back(i, j);
    return v;
}

std::vector<lp::Row> degree_and_pairing_rows(const EdgeVars& v) {
    const int n = v.inst.n();
    std::vector<lp::Row> rows;
    for (int i = 0; i < n; ++i) {  // in-degree
        lp::Row r;
        for (int j = 0; j < n; ++j)
            if (v.id(j, i) >= 0) r.terms.push_back({v.id(j, i), 1.0});
        r.lo = r.hi = 1.0;
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i) {  // out-degree
        lp::Row r;
        for (int j = 0; j < n; ++j)
            if (v.id(i, j) >= 0) r.terms.push_back({v.id(i, j), 1.0});
        r.lo = r.hi = 1.0;
        rows.push_back(std::move(r));
    }
    for (auto [i, j] : v.undirected) {
        lp::Row r;
        r.terms = {{v.id(i, j), 1.0}, {v.id(j, i), 1.0}};
        r.hi = 1.0;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<lp::Row> slab_prefix_rows(const EdgeVars& v) {
    SlabStructure slabs = build_slabs(v.inst.points, v.undirected);
    std::vector<lp::Row> rows;
    for (const Slab& slab : slabs.slabs) {
        lp::Row prefix;  // grows with m
        for (const SlabEdge& e : slab.edges) {
            prefix.terms.push_back({v.id(e.left, e.right), 1.0});   // left-to-right
            prefix.terms.push_back({v.id(e.right, e.left), -1.0});  // right-to-left
            lp::Row r = prefix;
            r.lo = 0.0;
            r.hi = 1.0;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::vector<lp::Row> static_intersection_rows(const EdgeVars& v) {
    const auto& pts = v.inst.points;
    std::vector<lp::Row> rows;
    const int m = static_cast<int>(v.undirected.size());
    for (int a = 0; a < m; ++a) {
        auto [i, j] = v.undirected[a];
        for (int b = a + 1; b < m; ++b) {
            auto [k, l] = v.undirected[b];
            if (!segments_cross(pts[i], pts[j], pts[k], pts[l])) continue;
            lp::Row r;
            r.terms = {{v.id(i, j), 1.0},
                       {v.id(j, i), 1.0},
                       {v.id(k, l), 1.0},
                       {v.id(l, k), 1.0}};
            r.hi = 1.0;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

namespace {

// Both directed subtour cuts for a proper vertex subset D.
void emit_component_cuts(const EdgeVars& v, const std::vector<int>& comp,
                         std::vector<lp::Row>& cuts) {
    const int n = v.inst.n();
    std::vector<char> in_d(n, 0);
    for (int u : comp) in_d[u] = 1;
    lp::Row incoming, outgoing;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (v.id(i, j) < 0) continue;
            if (!in_d[i] && in_d[j]) incoming.terms.push_back({v.id(i, j), 1.0});
            if (in_d[i] && !in_d[j]) outgoing.terms.push_back({v.id(i, j), 1.0});
        }
    }
    incoming.lo = 1.0;
    outgoing.lo = 1.0;
    cuts.push_back(std::move(incoming));
    cuts.push_back(std::move(outgoing));
}

}  // namespace

SeparationResult separate_subtours(const EdgeVars& v, const std::vector<double>& x) {
    const int n = v.inst.n();
    CallbackGraph g(n);
    for (auto [i, j] : v.undirected)
        if (x[v.id(i, j)] > 0.5 || x[v.id(j, i)] > 0.5) g.add_edge(i, j);

    SeparationResult res;
    auto comps = connected_components(g);
    if (comps.size() <= 1) return res;
    for (const auto& comp : comps) emit_component_cuts(v, comp, res.cuts);
    return res;
}

SeparationResult separate_intersections(const EdgeVars& v, const std::vector<double>& x) {
    const auto& pts = v.inst.points;
    const int m = static_cast<int>(v.undirected.size());

    std::vector<int> selected;
    for (int a = 0; a < m; ++a) {
        auto [i, j] = v.undirected[a];
        if (x[v.id(i, j)] > 0.5 || x[v.id(j, i)] > 0.5) selected.push_back(a);
    }
    std::vector<int> all(m);
    for (int a = 0; a < m; ++a) all[a] = a;

    auto conflicts = [&](int a, int b) {
        auto [i, j] = v.undirected[a];
        auto [k, l] = v.undirected[b];
        return segments_cross(pts[i], pts[j], pts[k], pts[l]);
    };

    SeparationResult res;
    std::set<std::pair<int, int>> covered;
    for (std::size_t s1 = 0; s1 < selected.size(); ++s1) {
        for (std::size_t s2 = s1 + 1; s2 < selected.size(); ++s2) {
            int a = selected[s1], b = selected[s2];
            if (!conflicts(a, b)) continue;
            if (covered.count({a, b})) continue;
            std::vector<int> clique =
                grow_maximal_clique({a, b}, selected, all, conflicts);
            lp::Row cut;
            for (int c : clique) {
                auto [i, j] = v.undirected[c];
                cut.terms.push_back({v.id(i, j), 1.0});
                cut.terms.push_back({v.id(j, i), 1.0});
            }
            cut.hi = 1.0;
            res.cuts.push_back(std::move(cut));
            for (std::size_t p = 0; p < clique.size(); ++p)
                for (std::size_t q2 = p + 1; q2 < clique.size(); ++q2)
                    covered.insert({std::min(clique[p], clique[q2]),
                                    std::max(clique[p], clique[q2])});
        }
    }
    return res;
}

SeparationResult branch_fixings(const EdgeVars& v, int var, const std::vector<int>& fix_state) {
    const auto& pts = v.inst.points;
    const int n = v.inst.n();
    auto [i, j] = v.var_edge[var];

    SeparationResult res;
    auto fix_zero = [&](int id) {
        if (id < 0 || id == var) return;
        if (fix_state[id] == 1) {
            res.prune = true;
            return;
        }
        if (fix_state[id] == 0) return;
        res.fixings.emplace_back(id, 0);
    };

    fix_zero(v.id(j, i));
    for (int k = 0; k < n && !res.prune; ++k) {
        if (k != j) fix_zero(v.id(i, k));  // other out-edges of i
        if (k != i) fix_zero(v.id(k, j));  // other in-edges of j
    }
    for (auto [k, l] : v.undirected) {
        if (res.prune) break;
        if (k == i || k == j || l == i || l == j) continue;
        if (segments_cross(pts[i], pts[j], pts[k], pts[l])) {
            fix_zero(v.id(k, l));
            fix_zero(v.id(l, k));
        }
    }
    if (res.prune) res.fixings.clear();
    return res;
}

SeparationResult separate_fractional(const EdgeVars& v, const std::vector<double>& x) {
    const int n = v.inst.n();
    constexpr double kEps = 1e-9;
    CallbackGraph g(n);
    for (auto [i, j] : v.undirected) {
        double w = x[v.id(i, j)] + x[v.id(j, i)];
        if (w > kEps) g.add_edge(i, j, w);
    }

    SeparationResult res;
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        for (const auto& comp : comps) emit_component_cuts(v, comp, res.cuts);
        return res;
    }
    MinCut cut = stoer_wagner_min_cut(g);
    if (cut.weight < 1.0 - 1e-6 && !cut.side.empty() &&
        static_cast<int>(cut.side.size()) < n) {
        emit_component_cuts(v, cut.side, res.cuts);
    }
    return res;
}

std::optional<std::pair<TwiceArea, std::vector<int>>> extract_polygon(
    const EdgeVars& v, const std::vector<double>& x) {
    const int n = v.inst.n();
    std::vector<int> succ(n, -1);
    for (int id = 0; id < static_cast<int>(v.var_edge.size()); ++id) {
        if (x[id] > 0.5) {
            auto [i, j] = v.var_edge[id];
            if (succ[i] >= 0) return std::nullopt;
            succ[i] = j;
        }
    }
    std::vector<int> order;
    int cur = 0;
    for (int step = 0; step < n; ++step) {
        if (cur < 0) return std::nullopt;
        order.push_back(cur);
        cur = succ[cur];
    }
    if (cur != 0) return std::nullopt;  // shorter cycle: subtour

    auto poly = validate_polygonization(v.inst, order);
    if (!poly) return std::nullopt;
    assert(poly->orientation == Orientation::CCW);  // slab rows force CCW
    return std::make_pair(poly->twice_area, order);
}

std::vector<double> characteristic_vector(const EdgeVars& v, const std::vector<int>& order) {
    std::vector<double> x(v.var_edge.size(), 0.0);
    std::vector<int> o = order;
    if (twice_signed_area(v.inst.points, o) < 0) std::reverse(o.begin(), o.end());
    const int n = static_cast<int>(o.size());
    for (int k = 0; k < n; ++k) {
        int id = v.id(o[k], o[(k + 1) % n]);
        assert(id >= 0);
        x[id] = 1.0;
    }
    return x;
}

BuiltModel build(const Instance& inst, oracle::Objective obj, int version,
                 bool orientation_fallback) {
    assert(version >= 1 && version <= 4);
    BuiltModel bm;
    bm.vars = std::make_shared<EdgeVars>(build_vars(inst));
    const auto vars = bm.vars;

    Model& m = bm.model;
    m.maximize = (obj == oracle::Objective::Max);
    m.obj_coef = vars->coef;
    m.constraints = degree_and_pairing_rows(*vars);
    auto slabs = slab_prefix_rows(*vars);
    m.constraints.insert(m.constraints.end(), slabs.begin(), slabs.end());
    if (version == 1) {
        auto inter = static_intersection_rows(*vars);
        m.constraints.insert(m.constraints.end(), inter.begin(), inter.end());
    }
    if (orientation_fallback) {
        lp::Row r;
        for (int id = 0; id < static_cast<int>(vars->coef.size()); ++id)
            r.terms.push_back({id, static_cast<double>(vars->coef[id])});
        r.lo = 0.0;
        m.constraints.push_back(std::move(r));
    }
    m.extract_incumbent = [vars](const std::vector<double>& x) {
        return extract_polygon(*vars, x);
    };

    bm.separators.push_back(
        {"edge-subtour", SepTrigger::Integral,
         [vars](const std::vector<double>& x) { return separate_subtours(*vars, x); },
         nullptr});
    if (version >= 2) {
        bm.separators.push_back(
            {"edge-clique", SepTrigger::Integral,
             [vars](const std::vector<double>& x) { return separate_intersections(*vars, x); },
             nullptr});
    }
    if (version >= 3) {
        bm.separators.push_back(
            {"edge-branch-fix", SepTrigger::Branching, nullptr,
             [vars](int var, const std::vector<int>& st) {
                 return branch_fixings(*vars, var, st);
             }});
    }
    if (version >= 4) {
        bm.separators.push_back(
            {"edge-mincut", SepTrigger::Fractional,
             [vars](const std::vector<double>& x) { return separate_fractional(*vars, x); },
             nullptr});
    }
    return bm;
}

}  // namespace edge_model
}  // namespace polyarea
