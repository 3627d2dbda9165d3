#include <doctest.h>

#include "polyarea/instance.hpp"
#include "polyarea/oracle.hpp"

using namespace polyarea;

namespace {

const char* kP4iJson =
    R"({"name":"p4i","points":[{"i":0,"x":0,"y":0},{"i":1,"x":6,"y":0},{"i":2,"x":0,"y":6},{"i":3,"x":1,"y":1}]})";

Instance p4i() { return parse_instance(kP4iJson); }

}  // namespace

TEST_CASE("parse_instance accepts the fixture") {
    const Instance inst = p4i();
    CHECK(inst.name == "p4i");
    REQUIRE(inst.n() == 4);
    CHECK(inst.points[3] == Point{1, 1});
}

TEST_CASE("parse_instance error codes") {
    auto code_of = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.code();
        }
        FAIL("expected a ParseError");
        return ParseErrorCode::Malformed;
    };
    CHECK(code_of("{not json") == ParseErrorCode::Malformed);
    CHECK(code_of(R"({"name":"x","points":[{"x":0,"y":0},{"x":0,"y":0},{"x":1,"y":2}]})") ==
          ParseErrorCode::DuplicatePoint);
    CHECK(code_of(R"({"name":"x","points":[{"x":0,"y":0},{"x":1,"y":1},{"x":2,"y":2}]})") ==
          ParseErrorCode::CollinearPoints);
    CHECK(code_of(
              R"({"name":"x","points":[{"x":0,"y":0},{"x":2000000000,"y":1},{"x":2,"y":5}]})") ==
          ParseErrorCode::CoordinateBound);
    CHECK(code_of(R"({"name":"x","points":[{"i":5,"x":0,"y":0},{"x":1,"y":0},{"x":0,"y":1}]})") ==
          ParseErrorCode::IndexMismatch);
    CHECK(code_of(R"({"name":"x","points":[{"x":0,"y":0},{"x":1,"y":0}]})") ==
          ParseErrorCode::TooFewPoints);
}

TEST_CASE("instance round-trip") {
    const Instance inst = p4i();
    const Instance again = parse_instance(write_instance(inst));
    CHECK(again.name == inst.name);
    CHECK(again.points == inst.points);
}

TEST_CASE("validate_polygonization") {
    const Instance inst = p4i();
    const auto poly = validate_polygonization(inst, {0, 1, 3, 2});
    REQUIRE(poly);
    CHECK(poly->twice_area == 12);
    CHECK(poly->orientation == Orientation::CCW);

    PolygonViolation why;
    const Instance square =
        make_instance("sq", {{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK_FALSE(validate_polygonization(square, {0, 1, 3, 2}, &why));
    CHECK(!why.message.empty());

    CHECK_FALSE(validate_polygonization(inst, {0, 1, 2}));        // missing index
    CHECK_FALSE(validate_polygonization(inst, {0, 1, 2, 2}));     // repeated index
}

TEST_CASE("validate_polygonization reversal invariance") {
    const Instance inst = p4i();
    const auto fwd = validate_polygonization(inst, {0, 1, 3, 2});
    const auto rev = validate_polygonization(inst, {2, 3, 1, 0});
    REQUIRE(fwd);
    REQUIRE(rev);
    CHECK(fwd->twice_area == rev->twice_area);
    CHECK(fwd->orientation != rev->orientation);
}

TEST_CASE("validator accepts exactly the oracle's orders") {
    const Instance inst = p4i();
    for (const Polygonization& p : oracle::all_polygonizations(inst))
        CHECK(validate_polygonization(inst, p.order));
}

TEST_CASE("solution record round-trip and invariants") {
    SolutionRecord rec;
    rec.instance_name = "p4i";
    rec.objective = "min";
    rec.order = {0, 1, 3, 2};
    rec.twice_area = 12;
    rec.status = SolveStatus::Optimal;
    rec.bound = 12;
    rec.gap = 0.0;
    rec.runtime_s = 0.25;
    rec.preset = "tri-v1";
    CHECK(parse_solution(write_solution(rec)) == rec);

    SolutionRecord bad = rec;
    bad.bound = 11;
    CHECK_THROWS(write_solution(bad));
}

TEST_CASE("status strings") {
    for (SolveStatus s :
         {SolveStatus::Optimal, SolveStatus::Feasible, SolveStatus::Infeasible, SolveStatus::Limit})
        CHECK(status_from_string(to_string(s)) == s);
    CHECK_FALSE(status_from_string("bogus"));
}

TEST_CASE("render_svg is deterministic and structured") {
    const Instance inst = p4i();
    const std::string dots = render_svg(inst);
    CHECK(dots == render_svg(inst));
    size_t circles = 0;
    for (size_t pos = 0; (pos = dots.find("<circle", pos)) != std::string::npos; ++pos) ++circles;
    CHECK(circles == 4);
    CHECK(dots.find("<path") == std::string::npos);

    const std::vector<int> order{0, 1, 3, 2};
    const std::string withpoly = render_svg(inst, &order);
    CHECK(withpoly.find("<path") != std::string::npos);
    CHECK(withpoly == render_svg(inst, &order));
}
