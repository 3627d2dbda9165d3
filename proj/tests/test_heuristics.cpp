#include <doctest.h>

#include "polyarea/gen.hpp"
#include "polyarea/heuristics.hpp"
#include "polyarea/oracle.hpp"

using namespace polyarea;

namespace {

Instance p4i() { return make_instance("p4i", {{0, 0}, {6, 0}, {0, 6}, {1, 1}}); }

TwiceArea hull_twice_area(const Instance& inst) {
    const auto hull = convex_hull(inst.points);
    return twice_signed_area(inst.points, hull);
}

}  // namespace

TEST_CASE("greedy on P4i") {
    const Polygonization mn = greedy_min_area(p4i());
    CHECK(mn.twice_area == 12);  // carves the max triangle (1,2,3), area 24
    const auto norm = validate_polygonization(p4i(), mn.order);
    REQUIRE(norm);
    CHECK(norm->twice_area == 12);

    const Polygonization mx = greedy_max_area(p4i());
    CHECK(mx.twice_area == 30);  // carves a min triangle, area 6
    CHECK(mx.twice_area >= mn.twice_area);
}

TEST_CASE("greedy on a bare triangle returns it") {
    const Instance t3 = make_instance("t3", {{0, 0}, {4, 0}, {0, 4}});
    CHECK(greedy_min_area(t3).twice_area == 16);
    CHECK(greedy_max_area(t3).twice_area == 16);
}

TEST_CASE("convex instances come back as the hull") {
    for (int n : {5, 8, 11}) {
        const Instance inst = convex_hull_size_instance(n, n, 31 + n);
        const TwiceArea hull = hull_twice_area(inst);
        CHECK(greedy_min_area(inst).twice_area == hull);
        CHECK(greedy_max_area(inst).twice_area == hull);
    }
}

TEST_CASE("greedy outputs are valid and hull-bounded on random instances") {
    int cases = 0;
    for (int n : {6, 10, 16, 24, 30}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const Instance inst = uniform_instance(n, seed * 131 + n);
            const TwiceArea hull = hull_twice_area(inst);
            for (const Polygonization& p : {greedy_min_area(inst), greedy_max_area(inst)}) {
                const auto ok = validate_polygonization(inst, p.order);
                REQUIRE(ok);
                CHECK(ok->twice_area == p.twice_area);
                CHECK(p.twice_area <= hull);
            }
            ++cases;
        }
    }
    CHECK(cases == 100);
}

TEST_CASE("heuristic values bracketed by oracle optima") {
    for (int n : {6, 7, 8, 9}) {
        for (std::uint64_t seed : {1ull, 2ull}) {
            const Instance inst = uniform_instance(n, seed * 977 + n);
            const TwiceArea lo = oracle::oracle_optimum(inst, oracle::Objective::Min).twice_area;
            const TwiceArea hi = oracle::oracle_optimum(inst, oracle::Objective::Max).twice_area;
            for (const Polygonization& p : {greedy_min_area(inst), greedy_max_area(inst)}) {
                CHECK(p.twice_area >= lo);
                CHECK(p.twice_area <= hi);
            }
        }
    }
}
