#include <doctest.h>

#include <vector>

#include "polyarea/lp.hpp"

using namespace polyarea;
using lp::kInf;
using lp::LpStatus;
using lp::Row;

TEST_CASE("max x+y subject to x+y <= 1") {
    const auto res = lp::solve({1.0, 1.0}, true, {0.0, 0.0}, {1.0, 1.0},
                               {Row{{{0, 1.0}, {1, 1.0}}, -kInf, 1.0}});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(1.0));
    CHECK(res.x[0] + res.x[1] == doctest::Approx(1.0));
}

TEST_CASE("unconstrained minimization sits at the lower bounds") {
    const auto res = lp::solve({3.0, 5.0, 1.0}, false, {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, {});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(0.0));
    for (double v : res.x) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("negative costs pull variables to their upper bounds") {
    const auto res = lp::solve({-2.0, 4.0}, false, {0.0, 0.0}, {3.0, 3.0}, {});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(-6.0));
    CHECK(res.x[0] == doctest::Approx(3.0));
    CHECK(res.x[1] == doctest::Approx(0.0));
}

TEST_CASE("p4i triangle relaxation") {
    // Three empty-triangle variables with areas 6, 24, 6; select exactly two,
    // the two cheap ones conflict-free: minimum 6 + 6 = 12.
    const std::vector<double> area{6.0, 24.0, 6.0};
    const auto res = lp::solve(area, false, {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0},
                               {Row{{{0, 1.0}, {1, 1.0}, {2, 1.0}}, 2.0, 2.0}});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(12.0));
    CHECK(res.x[1] == doctest::Approx(0.0));
}

TEST_CASE("equality rows are honored") {
    const auto res = lp::solve({1.0, 2.0}, false, {0.0, 0.0}, {kInf, kInf},
                               {Row{{{0, 1.0}, {1, 1.0}}, 4.0, 4.0},
                                Row{{{0, 1.0}, {1, -1.0}}, -kInf, 2.0}});
    REQUIRE(res.status == LpStatus::Optimal);
    // x + y = 4, minimize x + 2y with x - y <= 2: x = 3, y = 1.
    CHECK(res.objective == doctest::Approx(5.0));
    CHECK(res.x[0] == doctest::Approx(3.0));
    CHECK(res.x[1] == doctest::Approx(1.0));
}

TEST_CASE("range rows bind on both sides") {
    // 2 <= x + y <= 3, maximize x + y -> 3; minimize -> 2.
    const std::vector<Row> rows{Row{{{0, 1.0}, {1, 1.0}}, 2.0, 3.0}};
    const auto mx = lp::solve({1.0, 1.0}, true, {0.0, 0.0}, {5.0, 5.0}, rows);
    REQUIRE(mx.status == LpStatus::Optimal);
    CHECK(mx.objective == doctest::Approx(3.0));
    const auto mn = lp::solve({1.0, 1.0}, false, {0.0, 0.0}, {5.0, 5.0}, rows);
    REQUIRE(mn.status == LpStatus::Optimal);
    CHECK(mn.objective == doctest::Approx(2.0));
}

TEST_CASE("infeasible system detected") {
    const auto res = lp::solve({1.0}, false, {0.0}, {1.0},
                               {Row{{{0, 1.0}}, 2.0, kInf}});
    CHECK(res.status == LpStatus::Infeasible);
}

TEST_CASE("contradictory rows are infeasible") {
    const auto res = lp::solve({1.0, 1.0}, false, {0.0, 0.0}, {10.0, 10.0},
                               {Row{{{0, 1.0}, {1, 1.0}}, -kInf, 1.0},
                                Row{{{0, 1.0}, {1, 1.0}}, 3.0, kInf}});
    CHECK(res.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded maximization detected") {
    const auto res = lp::solve({1.0}, true, {0.0}, {kInf}, {});
    CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("degenerate vertex does not cycle") {
    // Many redundant rows through the origin; Bland fallback must terminate.
    std::vector<Row> rows;
    for (int k = 1; k <= 6; ++k)
        rows.push_back(Row{{{0, -1.0 * k}, {1, 1.0}}, -kInf, 0.0});
    rows.push_back(Row{{{0, 1.0}, {1, 1.0}}, -kInf, 2.0});
    const auto res = lp::solve({1.0, 1.0}, true, {0.0, 0.0}, {kInf, kInf}, rows);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(2.0));
}
