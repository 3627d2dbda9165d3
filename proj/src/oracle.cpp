#include "polyarea/oracle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace polyarea {
namespace oracle {

namespace {

struct Enumerator {
    const Instance& inst;
    const std::function<void(const Polygonization&)>& emit;
    std::vector<int> order;
    std::vector<char> used;

    Enumerator(const Instance& i, const std::function<void(const Polygonization&)>& e)
        : inst(i), emit(e), used(i.n(), 0) {}

    bool edge_ok(int from, int to) const {
        // The new edge may not cross any earlier edge of the partial chain.
        const Point& a = inst.points[from];
        const Point& b = inst.points[to];
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            if (segments_cross(a, b, inst.points[order[i]], inst.points[order[i + 1]]))
                return false;
        }
        return true;
    }

    bool closing_ok() const {
        const Point& a = inst.points[order.back()];
        const Point& b = inst.points[order[0]];
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (segments_cross(a, b, inst.points[order[i]], inst.points[order[i + 1]]))
                return false;
        return true;
    }

    void recurse() {
        const int n = inst.n();
        if (static_cast<int>(order.size()) == n) {
            if (!closing_ok()) return;
            TwiceArea signed_area = twice_signed_area(inst.points, order);
            if (signed_area <= 0) return;  // keep only the CCW representative
            Polygonization poly;
            poly.order = order;
            poly.twice_area = signed_area;
            poly.orientation = Orientation::CCW;
            emit(poly);
            return;
        }
        for (int v = 1; v < n; ++v) {
            if (used[v]) continue;
            if (!edge_ok(order.back(), v)) continue;
            used[v] = 1;
            order.push_back(v);
            recurse();
            order.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

void enumerate_polygonizations(const Instance& inst,
                               const std::function<void(const Polygonization&)>& emit,
                               int max_n) {
    if (inst.n() > max_n)
        throw std::invalid_argument("oracle enumeration refused: n = " +
                                    std::to_string(inst.n()) + " exceeds max_n = " +
                                    std::to_string(max_n));
    Enumerator e(inst, emit);
    e.used[0] = 1;
    e.order.push_back(0);
    e.recurse();
}

std::vector<Polygonization> all_polygonizations(const Instance& inst, int max_n) {
    std::vector<Polygonization> out;
    enumerate_polygonizations(inst, [&](const Polygonization& p) { out.push_back(p); }, max_n);
    return out;
}

OracleOptimum oracle_optimum(const Instance& inst, Objective obj, int max_n) {
    OracleOptimum best;
    bool found = false;
    enumerate_polygonizations(
        inst,
        [&](const Polygonization& p) {
            bool better = !found || (obj == Objective::Min ? p.twice_area < best.twice_area
                                                           : p.twice_area > best.twice_area);
            if (better) {
                best.twice_area = p.twice_area;
                best.order = p.order;
                found = true;
            }
        },
        max_n);
    if (!found) throw std::runtime_error("no polygonization found");
    return best;
}

}  // namespace oracle
}  // namespace polyarea
