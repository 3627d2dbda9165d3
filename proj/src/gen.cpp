#include "polyarea/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace polyarea {

namespace {

constexpr Coord kGenMax = 1'000'000;

std::string default_name(const std::string& kind, int n, std::uint64_t seed) {
    return kind + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
}

}  // namespace

Instance uniform_instance(int n, std::uint64_t seed, const std::string& name) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Coord> coord(0, kGenMax);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Point> pts(n);
        for (auto& p : pts) p = {coord(rng), coord(rng)};
        if (!validate_general_position(pts).ok) continue;
        return make_instance(name.empty() ? default_name("uniform", n, seed) : name,
                             std::move(pts));
    }
    throw std::runtime_error("failed to sample a general-position instance");
}

Instance convex_hull_size_instance(int n, int k, std::uint64_t seed, const std::string& name) {
    if (k < 3 || k > n) throw std::invalid_argument("need 3 <= k <= n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<Coord> coord(0, kGenMax);
    const double cx = kGenMax / 2.0, cy = kGenMax / 2.0, r = kGenMax * 0.45;

    for (int attempt = 0; attempt < 100000; ++attempt) {
        // k points in convex position: rounded points on a circle.
        std::vector<double> angles(k);
        for (double& a : angles) a = angle(rng);
        std::sort(angles.begin(), angles.end());
        std::vector<Point> pts;
        for (double a : angles)
            pts.push_back({static_cast<Coord>(std::llround(cx + r * std::cos(a))),
                           static_cast<Coord>(std::llround(cy + r * std::sin(a)))});
        if (!validate_general_position(pts).ok) continue;
        if (static_cast<int>(convex_hull(pts).size()) != k) continue;
        const std::vector<Point> hull_pts = pts;

        // Interior fill: rejection-sample strictly inside the hull.
        bool ok = true;
        while (static_cast<int>(pts.size()) < n) {
            bool placed = false;
            for (int tries = 0; tries < 10000; ++tries) {
                const Point cand{coord(rng), coord(rng)};
                bool inside = true;
                for (int h = 0; h < k && inside; ++h)
                    inside = orient(hull_pts[h], hull_pts[(h + 1) % k], cand) > 0;
                if (!inside) continue;
                pts.push_back(cand);
                if (validate_general_position(pts).ok) {
                    placed = true;
                    break;
                }
                pts.pop_back();
            }
            if (!placed) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (static_cast<int>(convex_hull(pts).size()) != k) continue;
        return make_instance(
            name.empty() ? default_name("hull" + std::to_string(k), n, seed) : name,
            std::move(pts));
    }
    throw std::runtime_error("failed to sample a hull-size-constrained instance");
}

}  // namespace polyarea
