#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace polyarea {

/// Undirected weighted graph over vertices 0..n-1, used to abstract interim
/// solutions during separation. No self loops; weights nonnegative.
class CallbackGraph {
public:
    explicit CallbackGraph(int n) : adj_(n) {}

    int size() const { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v, double w = 1.0);

    struct Neighbor {
        int to;
        double weight;
    };
    const std::vector<Neighbor>& neighbors(int v) const { return adj_[v]; }

private:
    std::vector<std::vector<Neighbor>> adj_;
};

/// DFS partition into maximal connected vertex sets.
std::vector<std::vector<int>> connected_components(const CallbackGraph& g);

/// Grows a maximal conflict clique from a seed pair. Items from
/// `solution_items` are tried before the remaining `all_items`; the result is
/// pairwise conflicting and no item of all_items conflicts with every member.
std::vector<int> grow_maximal_clique(std::pair<int, int> seed,
                                     const std::vector<int>& solution_items,
                                     const std::vector<int>& all_items,
                                     const std::function<bool(int, int)>& conflicts);

struct MinCut {
    std::vector<int> side;  // one side of the bipartition
    double weight = 0.0;
};

/// Global minimum cut of a weighted graph (Stoer-Wagner). Disconnected input
/// yields a weight-0 cut.
MinCut stoer_wagner_min_cut(const CallbackGraph& g);

struct GomoryHuTree {
    // parent[v] and parent_weight[v] for v >= 1 describe the tree edges;
    // parent[0] == -1.
    std::vector<int> parent;
    std::vector<double> parent_weight;

    /// Min u-v cut value: the minimum edge weight on the tree path.
    double min_cut(int u, int v) const;
};

/// Gomory-Hu tree of a connected weighted graph via |V|-1 max-flow calls
/// (Gusfield's variant).
GomoryHuTree gomory_hu_tree(const CallbackGraph& g);

}  // namespace polyarea
