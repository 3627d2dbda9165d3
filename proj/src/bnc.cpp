#include "polyarea/bnc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polyarea {

long SolveStats::total_cuts() const {
    long t = 0;
    for (const auto& [name, count] : cuts_by_family) t += count;
    return t;
}

double gap(double obj, double bound) {
    return std::fabs(bound - obj) / (1e-10 + std::fabs(obj));
}

TwiceArea safe_integer_bound(double lp_value, bool maximize) {
    return maximize ? static_cast<TwiceArea>(std::floor(lp_value + 1e-6))
                    : static_cast<TwiceArea>(std::ceil(lp_value - 1e-6));
}

namespace {

constexpr double kIntTol = 1e-6;
constexpr int kMaxResolves = 10000;

struct Node {
    std::vector<std::pair<int, int>> fixings;
    double bound;  // parent LP value; +-inf at the root
    long id = 0;
};

std::string cut_key(const lp::Row& row) {
    std::vector<lp::Term> terms = row.terms;
    std::sort(terms.begin(), terms.end(),
              [](const lp::Term& a, const lp::Term& b) { return a.var < b.var; });
    std::ostringstream os;
    os.precision(12);
    for (const auto& t : terms) os << t.var << ":" << t.coef << ",";
    os << "|" << row.lo << "|" << row.hi;
    return os.str();
}

bool is_integral(const std::vector<double>& x) {
    for (double v : x)
        if (std::fabs(v - std::round(v)) > kIntTol) return false;
    return true;
}

}  // namespace

SolveResult branch_and_cut(const Model& model, const std::vector<Separator>& separators,
                           const std::optional<WarmStart>& warm_start,
                           const SolveLimits& limits) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    auto elapsed_s = [&] {
        return std::chrono::duration<double>(Clock::now() - start).count();
    };

    const int n = model.num_vars();
    const bool maximize = model.maximize;
    auto better = [&](TwiceArea a, TwiceArea b) { return maximize ? a > b : a < b; };

    std::vector<double> obj(n);
    for (int j = 0; j < n; ++j) obj[j] = static_cast<double>(model.obj_coef[j]);
    std::vector<double> base_lo(n, 0.0), base_hi(n, 1.0);
    for (auto [v, val] : model.permanent_fixings) {
        base_lo[v] = val;
        base_hi[v] = val;
    }

    std::vector<lp::Row> rows = model.constraints;
    std::set<std::string> row_keys;
    for (const auto& r : rows) row_keys.insert(cut_key(r));

    SolveResult res;
    bool have_incumbent = false;
    if (warm_start) {
        have_incumbent = true;
        res.incumbent_value = warm_start->value;
        res.incumbent_order = warm_start->order;
    }

    auto node_better = [&](const Node& a, const Node& b) {
        if (a.bound != b.bound) return maximize ? a.bound > b.bound : a.bound < b.bound;
        return a.id < b.id;
    };
    auto queue_cmp = [&](const Node& a, const Node& b) { return node_better(b, a); };
    std::priority_queue<Node, std::vector<Node>, decltype(queue_cmp)> open(queue_cmp);
    long next_id = 0;
    open.push(Node{{}, maximize ? lp::kInf : -lp::kInf, next_id++});

    bool hit_limit = false;
    std::vector<double> lo(n), hi(n);

    while (!open.empty()) {
        if ((limits.nodes >= 0 && res.stats.nodes >= limits.nodes) ||
            elapsed_s() > limits.time_s) {
            hit_limit = true;
            break;
        }
        Node node = open.top();
        open.pop();
        ++res.stats.nodes;

        if (have_incumbent && std::isfinite(node.bound) &&
            !better(safe_integer_bound(node.bound, maximize), res.incumbent_value))
            continue;

        lo = base_lo;
        hi = base_hi;
        bool conflict = false;
        for (auto [v, val] : node.fixings) {
            if ((val == 0 && lo[v] > 0.5) || (val == 1 && hi[v] < 0.5)) conflict = true;
            lo[v] = val;
            hi[v] = val;
        }
        if (conflict) continue;

        // Solve-and-separate loop for this node.
        lp::LpResult lpres;
        bool pruned = false;
        int resolves = 0;
        for (;;) {
            if (++resolves > kMaxResolves)
                throw std::logic_error("separation did not converge at a node");
            lpres = lp::solve(obj, maximize, lo, hi, rows);
            ++res.stats.lp_solves;
            res.stats.lp_iterations += lpres.iterations;
            if (lpres.status == lp::LpStatus::Infeasible) {
                pruned = true;
                break;
            }
            if (lpres.status != lp::LpStatus::Optimal)
                throw std::runtime_error("LP relaxation did not solve to optimality");

            TwiceArea node_bound = safe_integer_bound(lpres.objective, maximize);
            if (have_incumbent && !better(node_bound, res.incumbent_value)) {
                pruned = true;
                break;
            }

            const bool integral = is_integral(lpres.x);
            bool added = false;
            for (const Separator& sep : separators) {
                if (sep.trigger != (integral ? SepTrigger::Integral : SepTrigger::Fractional))
                    continue;
                if (!sep.separate) continue;
                SeparationResult sr = sep.separate(lpres.x);
                long fresh = 0;
                for (lp::Row& cut : sr.cuts) {
                    if (row_keys.insert(cut_key(cut)).second) {
                        rows.push_back(std::move(cut));
                        ++fresh;
                    }
                }
                if (fresh > 0) {
                    res.stats.cuts_by_family[sep.name] += fresh;
                    added = true;
                    break;  // first non-empty family re-solves before later ones
                }
            }
            if (added) continue;

            if (integral) {
                if (!model.extract_incumbent)
                    throw std::logic_error("model lacks an incumbent extractor");
                auto inc = model.extract_incumbent(lpres.x);
                if (!inc)
                    throw std::logic_error(
                        "integral, separator-clean assignment failed exact validation");
                if (!have_incumbent || better(inc->first, res.incumbent_value)) {
                    have_incumbent = true;
                    res.incumbent_value = inc->first;
                    res.incumbent_order = inc->second;
                    res.incumbent.assign(n, 0.0);
                    for (int j = 0; j < n; ++j) res.incumbent[j] = std::round(lpres.x[j]);
                }
                pruned = true;
            }
            break;
        }
        if (pruned || is_integral(lpres.x)) continue;

        // Branch on the most fractional variable, ties by lowest id.
        int q = -1;
        double best_frac = 1.0;
        for (int j = 0; j < n; ++j) {
            if (lo[j] == hi[j]) continue;
            double f = std::fabs(lpres.x[j] - 0.5);
            if (f > 0.5 - kIntTol) continue;
            if (f < best_frac) {
                best_frac = f;
                q = j;
            }
        }
        if (q < 0) continue;  // fully fixed fractional cannot happen

        Node child0{node.fixings, lpres.objective, next_id++};
        child0.fixings.emplace_back(q, 0);
        open.push(std::move(child0));

        Node child1{node.fixings, lpres.objective, next_id++};
        child1.fixings.emplace_back(q, 1);
        bool prune_child1 = false;
        std::vector<int> fix_state(n, -1);
        for (int j = 0; j < n; ++j)
            if (base_lo[j] == base_hi[j]) fix_state[j] = static_cast<int>(base_lo[j]);
        for (auto [v, val] : child1.fixings) fix_state[v] = val;
        for (const Separator& sep : separators) {
            if (sep.trigger != SepTrigger::Branching || !sep.on_branch) continue;
            SeparationResult sr = sep.on_branch(q, fix_state);
            if (sr.prune) {
                prune_child1 = true;
                break;
            }
            for (auto [v, val] : sr.fixings) {
                child1.fixings.emplace_back(v, val);
                fix_state[v] = val;
            }
        }
        if (!prune_child1) open.push(std::move(child1));
    }

    // Proven bound: best over the remaining open nodes, capped by the incumbent.
    bool open_nonempty = !open.empty();
    double best_open = maximize ? -lp::kInf : lp::kInf;
    while (!open.empty()) {
        const Node& nd = open.top();
        if (std::isfinite(nd.bound)) {
            best_open = maximize ? std::max(best_open, nd.bound)
                                 : std::min(best_open, nd.bound);
        } else {
            best_open = nd.bound;  // unexplored root: no proven bound
        }
        open.pop();
    }

    if (!open_nonempty) {
        res.status = have_incumbent ? SolveStatus::Optimal : SolveStatus::Infeasible;
        res.bound = res.incumbent_value;
    } else {
        res.status = SolveStatus::Limit;
        if (std::isfinite(best_open)) {
            TwiceArea ob = safe_integer_bound(best_open, maximize);
            if (have_incumbent)
                res.bound = maximize ? std::max(ob, res.incumbent_value)
                                     : std::min(ob, res.incumbent_value);
            else
                res.bound = ob;
        } else if (have_incumbent) {
            res.bound = res.incumbent_value;  // nothing proven beyond the incumbent
        }
    }
    res.gap = have_incumbent ? gap(double(res.incumbent_value), double(res.bound)) : lp::kInf;
    if (res.status == SolveStatus::Optimal && have_incumbent) res.gap = 0.0;
    res.stats.wall_s = elapsed_s();
    return res;
}

}  // namespace polyarea
