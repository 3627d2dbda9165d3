#include "polyarea/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace polyarea {

using nlohmann::json;

Instance make_instance(std::string name, std::vector<Point> points) {
    if (points.size() < 3)
        throw ParseError(ParseErrorCode::TooFewPoints, "instance needs at least 3 points");
    for (const Point& p : points) {
        if (std::llabs(p.x) > kCoordBound || std::llabs(p.y) > kCoordBound)
            throw ParseError(ParseErrorCode::CoordinateBound,
                             "coordinate exceeds bound 2^30");
    }
    GeneralPositionReport gp = validate_general_position(points);
    if (!gp.ok) {
        throw ParseError(gp.duplicate ? ParseErrorCode::DuplicatePoint
                                      : ParseErrorCode::CollinearPoints,
                         gp.message);
    }
    return Instance{std::move(name), std::move(points)};
}

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(ParseErrorCode::Malformed, e.what());
    }
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError(ParseErrorCode::Malformed, "expected object with a points array");

    std::vector<Point> pts;
    int pos = 0;
    for (const auto& jp : j["points"]) {
        if (!jp.is_object() || !jp.contains("x") || !jp.contains("y") ||
            !jp["x"].is_number_integer() || !jp["y"].is_number_integer())
            throw ParseError(ParseErrorCode::Malformed, "point needs integer x and y");
        if (jp.contains("i") && jp["i"].get<long long>() != pos) {
            std::ostringstream os;
            os << "point index field " << jp["i"].get<long long>()
               << " does not match position " << pos;
            throw ParseError(ParseErrorCode::IndexMismatch, os.str());
        }
        pts.push_back({jp["x"].get<Coord>(), jp["y"].get<Coord>()});
        ++pos;
    }
    std::string name = j.value("name", std::string("unnamed"));
    return make_instance(std::move(name), std::move(pts));
}

std::string write_instance(const Instance& inst) {
    json j;
    j["name"] = inst.name;
    j["points"] = json::array();
    for (int i = 0; i < inst.n(); ++i)
        j["points"].push_back({{"i", i}, {"x", inst.points[i].x}, {"y", inst.points[i].y}});
    return j.dump(2) + "\n";
}

std::optional<Polygonization> validate_polygonization(const Instance& inst,
                                                      const std::vector<int>& order,
                                                      PolygonViolation* violation) {
    auto fail = [&](const std::string& msg) -> std::optional<Polygonization> {
        if (violation) violation->message = msg;
        return std::nullopt;
    };

    const int n = inst.n();
    if (static_cast<int>(order.size()) != n)
        return fail("order has " + std::to_string(order.size()) + " entries, expected " +
                    std::to_string(n));
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n) return fail("index " + std::to_string(v) + " out of range");
        if (seen[v]) return fail("index " + std::to_string(v) + " repeated");
        seen[v] = 1;
    }

    // Pairwise non-crossing of the n cyclic edges; adjacent edges share an
    // endpoint and are exempt by the crossing predicate itself.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Point& a = inst.points[order[i]];
            const Point& b = inst.points[order[(i + 1) % n]];
            const Point& c = inst.points[order[j]];
            const Point& d = inst.points[order[(j + 1) % n]];
            if (segments_cross(a, b, c, d)) {
                std::ostringstream os;
                os << "edges (" << order[i] << "," << order[(i + 1) % n] << ") and ("
                   << order[j] << "," << order[(j + 1) % n] << ") cross";
                return fail(os.str());
            }
        }
    }

    TwiceArea signed_area = twice_signed_area(inst.points, order);
    if (signed_area == 0) return fail("degenerate polygon with zero area");
    Polygonization poly;
    poly.order = order;
    poly.twice_area = std::llabs(signed_area);
    poly.orientation = signed_area > 0 ? Orientation::CCW : Orientation::CW;
    return poly;
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Limit: return "limit";
    }
    return "unknown";
}

std::optional<SolveStatus> status_from_string(const std::string& s) {
    if (s == "optimal") return SolveStatus::Optimal;
    if (s == "feasible") return SolveStatus::Feasible;
    if (s == "infeasible") return SolveStatus::Infeasible;
    if (s == "limit") return SolveStatus::Limit;
    return std::nullopt;
}

std::string write_solution(const SolutionRecord& rec) {
    if (rec.status == SolveStatus::Optimal && rec.bound != rec.twice_area)
        throw std::invalid_argument("optimal record must have bound == twice_area");
    json j;
    j["instance"] = rec.instance_name;
    j["objective"] = rec.objective;
    j["order"] = rec.order;
    j["twice_area"] = rec.twice_area;
    j["status"] = to_string(rec.status);
    j["bound"] = rec.bound;
    j["gap"] = rec.gap;
    j["runtime_s"] = rec.runtime_s;
    j["preset"] = rec.preset;
    return j.dump(2) + "\n";
}

SolutionRecord parse_solution(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(ParseErrorCode::Malformed, e.what());
    }
    SolutionRecord rec;
    try {
        rec.instance_name = j.at("instance").get<std::string>();
        rec.objective = j.at("objective").get<std::string>();
        rec.order = j.at("order").get<std::vector<int>>();
        rec.twice_area = j.at("twice_area").get<TwiceArea>();
        auto st = status_from_string(j.at("status").get<std::string>());
        if (!st) throw ParseError(ParseErrorCode::Malformed, "unknown status");
        rec.status = *st;
        rec.bound = j.at("bound").get<TwiceArea>();
        rec.gap = j.at("gap").get<double>();
        rec.runtime_s = j.at("runtime_s").get<double>();
        rec.preset = j.at("preset").get<std::string>();
    } catch (const json::exception& e) {
        throw ParseError(ParseErrorCode::Malformed, e.what());
    }
    return rec;
}

std::string render_svg(const Instance& inst, const std::vector<int>* order) {
    Coord min_x = inst.points[0].x, max_x = min_x;
    Coord min_y = inst.points[0].y, max_y = min_y;
    for (const Point& p : inst.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double w = std::max<double>(1.0, double(max_x - min_x));
    double h = std::max<double>(1.0, double(max_y - min_y));
    double mx = 0.05 * w, my = 0.05 * h;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << (double(min_x) - mx) << " " << (double(min_y) - my) << " " << (w + 2 * mx) << " "
       << (h + 2 * my) << "\">\n";
    // Flip y so the drawing matches the usual mathematical orientation.
    os << "<g transform=\"translate(0," << (double(min_y) + double(max_y))
       << ") scale(1,-1)\">\n";

    if (order && order->size() >= 3) {
        os << "<path d=\"M";
        for (std::size_t i = 0; i < order->size(); ++i) {
            const Point& p = inst.points[(*order)[i]];
            os << (i == 0 ? "" : " L") << p.x << " " << p.y;
        }
        os << " Z\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" stroke-width=\""
           << (w / 200.0) << "\"/>\n";
    }
    double r = std::max(w, h) / 100.0;
    for (const Point& p : inst.points)
        os << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << r
           << "\" fill=\"#333333\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace polyarea
