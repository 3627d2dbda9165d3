#pragma once

#include <limits>
#include <vector>

namespace polyarea {
namespace lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kFeasTol = 1e-7;
inline constexpr double kOptTol = 1e-7;

struct Term {
    int var = 0;
    double coef = 0.0;
};

/// Range row: lo <= sum(terms) <= hi (either side may be infinite; lo == hi
/// expresses an equality).
struct Row {
    std::vector<Term> terms;
    double lo = -kInf;
    double hi = kInf;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;  // structural values, valid when Optimal
    int iterations = 0;
};

/// Bounded-variable two-phase primal simplex (dense tableau). Minimizes c.x
/// (or maximizes) subject to the rows and per-variable bounds. Cycling is
/// guarded by switching to Bland's rule after a degenerate-pivot budget.
LpResult solve(const std::vector<double>& objective, bool maximize,
               const std::vector<double>& lower, const std::vector<double>& upper,
               const std::vector<Row>& rows);

}  // namespace lp
}  // namespace polyarea
