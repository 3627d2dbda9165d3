#include "polyarea/cutgraph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>

namespace polyarea {

void CallbackGraph::add_edge(int u, int v, double w) {
    assert(u != v && w >= 0.0);
    adj_[u].push_back({v, w});
    adj_[v].push_back({u, w});
}

std::vector<std::vector<int>> connected_components(const CallbackGraph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> comps;
    std::vector<char> visited(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        comps.emplace_back();
        stack.push_back(s);
        visited[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (const auto& nb : g.neighbors(v)) {
                if (!visited[nb.to]) {
                    visited[nb.to] = 1;
                    stack.push_back(nb.to);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

std::vector<int> grow_maximal_clique(std::pair<int, int> seed,
                                     const std::vector<int>& solution_items,
                                     const std::vector<int>& all_items,
                                     const std::function<bool(int, int)>& conflicts) {
    assert(conflicts(seed.first, seed.second));
    std::vector<int> clique{seed.first, seed.second};

    auto try_add = [&](int item) {
        for (int c : clique)
            if (c == item) return;
        for (int c : clique)
            if (!conflicts(item, c)) return;
        clique.push_back(item);
    };
    for (int item : solution_items) try_add(item);
    for (int item : all_items) try_add(item);
    return clique;
}

MinCut stoer_wagner_min_cut(const CallbackGraph& g) {
    const int n = g.size();
    assert(n >= 2);

    // Dense weight matrix over contracted super-vertices.
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u)
        for (const auto& nb : g.neighbors(u))
            if (u < nb.to) {
                w[u][nb.to] += nb.weight;
                w[nb.to][u] += nb.weight;
            }

    std::vector<std::vector<int>> members(n);
    for (int v = 0; v < n; ++v) members[v] = {v};
    std::vector<int> active(n);
    for (int v = 0; v < n; ++v) active[v] = v;

    MinCut best;
    best.weight = std::numeric_limits<double>::infinity();

    while (active.size() > 1) {
        // Maximum-adjacency ordering.
        std::vector<double> key(n, 0.0);
        std::vector<char> in_a(n, 0);
        int prev = -1, last = -1;
        for (std::size_t step = 0; step < active.size(); ++step) {
            int sel = -1;
            for (int v : active)
                if (!in_a[v] && (sel < 0 || key[v] > key[sel])) sel = v;
            in_a[sel] = 1;
            prev = last;
            last = sel;
            for (int v : active)
                if (!in_a[v]) key[v] += w[sel][v];
        }
        // Cut of the phase: the last vertex against the rest.
        if (key[last] < best.weight) {
            best.weight = key[last];
            best.side = members[last];
        }
        // Merge last into prev.
        for (int v : active) {
            if (v == last || v == prev) continue;
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
        active.erase(std::find(active.begin(), active.end(), last));
    }
    std::sort(best.side.begin(), best.side.end());
    return best;
}

double GomoryHuTree::min_cut(int u, int v) const {
    // Walk both vertices to the root, tracking the smallest edge on the path.
    std::vector<int> up;
    for (int x = u; x != -1; x = parent[x]) up.push_back(x);
    std::vector<char> on_path(parent.size(), 0);
    for (int x : up) on_path[x] = 1;
    int meet = v;
    while (!on_path[meet]) meet = parent[meet];

    double best = std::numeric_limits<double>::infinity();
    for (int x = u; x != meet; x = parent[x]) best = std::min(best, parent_weight[x]);
    for (int x = v; x != meet; x = parent[x]) best = std::min(best, parent_weight[x]);
    return best;
}

namespace {

// Edmonds-Karp max-flow on an undirected graph given as a dense capacity matrix.
double max_flow(std::vector<std::vector<double>> cap, int s, int t,
                std::vector<char>* source_side) {
    const int n = static_cast<int>(cap.size());
    double flow = 0.0;
    for (;;) {
        std::vector<int> parent(n, -1);
        parent[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && parent[t] < 0) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (parent[v] < 0 && cap[u][v] > 1e-12) {
                    parent[v] = u;
                    q.push(v);
                }
        }
        if (parent[t] < 0) break;
        double aug = std::numeric_limits<double>::infinity();
        for (int v = t; v != s; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
        for (int v = t; v != s; v = parent[v]) {
            cap[parent[v]][v] -= aug;
            cap[v][parent[v]] += aug;
        }
        flow += aug;
    }
    if (source_side) {
        source_side->assign(n, 0);
        std::vector<int> stack{s};
        (*source_side)[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (!(*source_side)[v] && cap[u][v] > 1e-12) {
                    (*source_side)[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return flow;
}

}  // namespace

GomoryHuTree gomory_hu_tree(const CallbackGraph& g) {
    const int n = g.size();
    std::vector<std::vector<double>> cap(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u)
        for (const auto& nb : g.neighbors(u))
            if (u < nb.to) {
                cap[u][nb.to] += nb.weight;
                cap[nb.to][u] += nb.weight;
            }

    GomoryHuTree tree;
    tree.parent.assign(n, 0);
    tree.parent[0] = -1;
    tree.parent_weight.assign(n, 0.0);

    for (int i = 1; i < n; ++i) {
        std::vector<char> side;
        double f = max_flow(cap, i, tree.parent[i], &side);
        tree.parent_weight[i] = f;
        for (int j = i + 1; j < n; ++j)
            if (side[j] && tree.parent[j] == tree.parent[i]) tree.parent[j] = i;
    }
    return tree;
}

}  // namespace polyarea
