#include <doctest.h>

#include <vector>

#include "polyarea/bnc.hpp"

using namespace polyarea;
using lp::kInf;
using lp::Row;

namespace {

// Knapsack-style model whose incumbents need no geometric decoding: any
// integral assignment decodes to its exact objective with a dummy order.
Model toy_model(std::vector<TwiceArea> coefs, bool maximize, std::vector<Row> rows) {
    Model m;
    m.obj_coef = std::move(coefs);
    m.maximize = maximize;
    m.constraints = std::move(rows);
    m.extract_incumbent =
        [coefs = m.obj_coef](const std::vector<double>& x)
        -> std::optional<std::pair<TwiceArea, std::vector<int>>> {
        TwiceArea v = 0;
        for (size_t i = 0; i < coefs.size(); ++i)
            if (x[i] > 0.5) v += coefs[i];
        return std::pair{v, std::vector<int>{}};
    };
    return m;
}

}  // namespace

TEST_CASE("safe_integer_bound") {
    CHECK(safe_integer_bound(11.3, false) == 12);         // min: round the LP bound up
    CHECK(safe_integer_bound(30.0000003, true) == 30);    // max: tolerate LP noise
    CHECK(safe_integer_bound(29.9999997, true) == 30);
    CHECK(safe_integer_bound(12.0, false) == 12);
    CHECK(safe_integer_bound(12.0, true) == 12);
    CHECK(safe_integer_bound(-4.5, true) == -5);
}

TEST_CASE("gap formula") {
    CHECK(gap(100.0, 110.0) == doctest::Approx(0.1));
    CHECK(gap(42.0, 42.0) == doctest::Approx(0.0));
    CHECK(gap(0.0, 1.0) == doctest::Approx(1e10).epsilon(1e-3));
}

TEST_CASE("fractional LP optimum forces branching") {
    // max 5a + 4b st 6a + 4b <= 7: LP relaxation gives a=1, b=1/4 (value 6);
    // the IP optimum takes a alone.
    Model m = toy_model({5, 4}, true, {Row{{{0, 6.0}, {1, 4.0}}, -kInf, 7.0}});
    const SolveResult r = branch_and_cut(m, {});
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.incumbent_value == 5);
    CHECK(r.bound == 5);
    CHECK(r.gap == doctest::Approx(0.0));
    CHECK(r.stats.nodes >= 2);  // root was fractional
}

TEST_CASE("integral root solves in one node") {
    Model m = toy_model({3, 7}, true, {});
    const SolveResult r = branch_and_cut(m, {});
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.incumbent_value == 10);
    CHECK(r.stats.nodes == 1);
}

TEST_CASE("minimization with a covering row") {
    // min 3a + 5b + 4c st a + b + c >= 2 -> a + c = 7.
    Model m = toy_model({3, 5, 4}, false,
                        {Row{{{0, 1.0}, {1, 1.0}, {2, 1.0}}, 2.0, kInf}});
    const SolveResult r = branch_and_cut(m, {});
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.incumbent_value == 7);
}

TEST_CASE("infeasible model") {
    Model m = toy_model({1, 1}, false, {Row{{{0, 1.0}, {1, 1.0}}, 3.0, kInf}});
    CHECK(branch_and_cut(m, {}).status == SolveStatus::Infeasible);
}

TEST_CASE("permanent fixings are respected") {
    Model m = toy_model({5, 4}, true, {});
    m.permanent_fixings = {{0, 0}};
    const SolveResult r = branch_and_cut(m, {});
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.incumbent_value == 4);
}

TEST_CASE("warm start never worsens and survives limits") {
    Model m = toy_model({5, 4}, true, {Row{{{0, 6.0}, {1, 4.0}}, -kInf, 7.0}});
    WarmStart ws{4, {}};
    SolveLimits zero_nodes;
    zero_nodes.nodes = 0;
    const SolveResult limited = branch_and_cut(m, {}, ws, zero_nodes);
    CHECK(limited.status == SolveStatus::Limit);
    CHECK(limited.incumbent_value == 4);

    const SolveResult full = branch_and_cut(m, {}, ws);
    REQUIRE(full.status == SolveStatus::Optimal);
    CHECK(full.incumbent_value >= 4);
}

TEST_CASE("an optimal warm start still proves optimality") {
    Model m = toy_model({3, 7}, true, {});
    const SolveResult r = branch_and_cut(m, {}, WarmStart{10, {}});
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.incumbent_value == 10);
    CHECK(r.bound == 10);
}

TEST_CASE("integral separator cuts off a candidate and is counted") {
    // max a + b with a lazy "conflict" a + b <= 1.
    Model m = toy_model({1, 1}, true, {});
    Separator sep;
    sep.name = "conflict";
    sep.trigger = SepTrigger::Integral;
    sep.separate = [](const std::vector<double>& x) {
        SeparationResult res;
        if (x[0] > 0.5 && x[1] > 0.5)
            res.cuts.push_back(Row{{{0, 1.0}, {1, 1.0}}, -kInf, 1.0});
        return res;
    };
    const SolveResult r = branch_and_cut(m, {sep});
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.incumbent_value == 1);
    CHECK(r.stats.cuts_by_family.at("conflict") >= 1);
}

TEST_CASE("time limit yields Limit status") {
    Model m = toy_model({5, 4, 3, 6, 2, 7, 1, 8}, true,
                        {Row{{{0, 6.0}, {1, 4.0}, {2, 3.0}, {3, 5.0},
                              {4, 2.0}, {5, 6.0}, {6, 1.0}, {7, 7.0}},
                             -kInf, 11.5}});
    SolveLimits lim;
    lim.time_s = 0.0;
    const SolveResult r = branch_and_cut(m, {}, WarmStart{0, {}}, lim);
    CHECK(r.status == SolveStatus::Limit);
}
