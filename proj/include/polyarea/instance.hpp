#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyarea/geom.hpp"

namespace polyarea {

enum class ParseErrorCode {
    Malformed,
    DuplicatePoint,
    CollinearPoints,
    CoordinateBound,
    IndexMismatch,
    TooFewPoints,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ParseErrorCode code() const { return code_; }

private:
    ParseErrorCode code_;
};

/// Immutable point set with integer coordinates and identity indices 0..n-1.
struct Instance {
    std::string name;
    std::vector<Point> points;

    int n() const { return static_cast<int>(points.size()); }
};

/// Builds and validates an instance from raw data (n >= 3, coordinate bound,
/// general position). Throws ParseError on violation.
Instance make_instance(std::string name, std::vector<Point> points);

/// Parses the JSON instance format:
///   {"name": string, "points": [{"i": int, "x": int, "y": int}, ...]}
/// The "i" field is optional but must match the array position when present.
Instance parse_instance(const std::string& text);
std::string write_instance(const Instance& inst);

enum class Orientation { CCW, CW };

struct Polygonization {
    std::vector<int> order;      // cyclic vertex order as given
    TwiceArea twice_area = 0;    // absolute value, > 0
    Orientation orientation = Orientation::CCW;
};

struct PolygonViolation {
    std::string message;
};

/// Checks that `order` is a permutation of 0..n-1 whose cyclic edges are
/// pairwise non-crossing (adjacent edges exempt). Accepts both orientations.
std::optional<Polygonization> validate_polygonization(const Instance& inst,
                                                      const std::vector<int>& order,
                                                      PolygonViolation* violation = nullptr);

enum class SolveStatus { Optimal, Feasible, Infeasible, Limit };

std::string to_string(SolveStatus s);
std::optional<SolveStatus> status_from_string(const std::string& s);

struct SolutionRecord {
    std::string instance_name;
    std::string objective;  // "min" | "max"
    std::vector<int> order;
    TwiceArea twice_area = 0;
    SolveStatus status = SolveStatus::Feasible;
    TwiceArea bound = 0;
    double gap = 0.0;
    double runtime_s = 0.0;
    std::string preset;

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// Round-trip JSON for solution records. write_solution rejects records whose
/// Optimal status does not carry bound == twice_area.
std::string write_solution(const SolutionRecord& rec);
SolutionRecord parse_solution(const std::string& text);

/// Deterministic SVG: points as circles, optional polygon as a closed path,
/// viewBox fitted with a 5% margin.
std::string render_svg(const Instance& inst, const std::vector<int>* order = nullptr);

}  // namespace polyarea
