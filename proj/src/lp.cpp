#include "polyarea/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cassert>
#include <cmath>

namespace polyarea {
namespace lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kDegenerateBudget = 2000;
constexpr int kIterCap = 200000;

enum class VarStatus : char { Basic, AtLower, AtUpper };

struct Tableau {
    int m = 0;       // rows
    int ncols = 0;   // structural + slack + artificial
    int nstruct = 0;
    Eigen::MatrixXd T;            // m x ncols, B^{-1} A
    Eigen::VectorXd xB;           // basic values
    Eigen::RowVectorXd d;         // reduced costs
    std::vector<double> lo, up;   // column bounds
    std::vector<VarStatus> status;
    std::vector<int> basis;       // column basic in each row
    std::vector<double> nb_value; // value of each nonbasic column (its bound)

    double col_value(int j) const {
        return status[j] == VarStatus::AtUpper ? up[j] : lo[j];
    }
};

// Recompute the reduced-cost row for cost vector c (length ncols).
void price_all(Tableau& t, const Eigen::RowVectorXd& c) {
    Eigen::RowVectorXd cB(t.m);
    for (int i = 0; i < t.m; ++i) cB(i) = c(t.basis[i]);
    t.d = c - cB * t.T;
    for (int i = 0; i < t.m; ++i) t.d(t.basis[i]) = 0.0;
}

struct PivotOutcome {
    bool moved = false;       // progress made (pivot or bound flip)
    bool unbounded = false;
    bool degenerate = false;
};

// One primal simplex iteration for column q moving in direction dir (+1 from
// lower, -1 from upper).
PivotOutcome step(Tableau& t, int q, int dir, bool bland) {
    const Eigen::VectorXd alpha = t.T.col(q);

    double t_max = kInf;
    int leave_row = -1;
    bool leave_to_upper = false;
    for (int i = 0; i < t.m; ++i) {
        double a = dir * alpha(i);
        int b = t.basis[i];
        double limit = kInf;
        bool to_upper = false;
        if (a > kPivotTol) {
            if (t.lo[b] > -kInf) limit = (t.xB(i) - t.lo[b]) / a;
        } else if (a < -kPivotTol) {
            if (t.up[b] < kInf) {
                limit = (t.up[b] - t.xB(i)) / (-a);
                to_upper = true;
            }
        }
        if (limit < -1e-11) limit = 0.0;
        if (limit < t_max - 1e-12 ||
            (limit < t_max + 1e-12 && leave_row >= 0 &&
             (bland ? t.basis[i] < t.basis[leave_row]
                    : std::fabs(alpha(i)) > std::fabs(alpha(leave_row))))) {
            t_max = std::max(0.0, limit);
            leave_row = i;
            leave_to_upper = to_upper;
        }
    }
    // The entering variable's own opposite bound.
    double flip = (t.lo[q] > -kInf && t.up[q] < kInf) ? t.up[q] - t.lo[q] : kInf;

    PivotOutcome out;
    if (t_max == kInf && flip == kInf) {
        out.unbounded = true;
        return out;
    }

    if (flip <= t_max) {
        // Bound flip, no basis change.
        t.xB -= dir * flip * alpha;
        t.status[q] = (dir > 0) ? VarStatus::AtUpper : VarStatus::AtLower;
        out.moved = true;
        out.degenerate = flip < 1e-12;
        return out;
    }

    const int r = leave_row;
    const int leaving = t.basis[r];
    const double step_len = t_max;
    out.degenerate = step_len < 1e-12;

    // Update basic values, then swap q into the basis.
    t.xB -= dir * step_len * alpha;
    t.xB(r) = t.col_value(q) + dir * step_len;

    double piv = t.T(r, q);
    t.T.row(r) /= piv;
    for (int i = 0; i < t.m; ++i) {
        if (i == r) continue;
        double f = t.T(i, q);
        if (f != 0.0) t.T.row(i) -= f * t.T.row(r);
    }
    double dq = t.d(q);
    if (dq != 0.0) t.d -= dq * t.T.row(r);
    t.d(q) = 0.0;

    t.status[leaving] = leave_to_upper ? VarStatus::AtUpper : VarStatus::AtLower;
    t.status[q] = VarStatus::Basic;
    t.basis[r] = q;
    out.moved = true;
    return out;
}

// Runs primal simplex to optimality for the current cost row. Returns status.
LpStatus optimize(Tableau& t, const Eigen::RowVectorXd& c, int& iters,
                  const std::vector<char>& priceable) {
    price_all(t, c);
    int degenerate_run = 0;
    bool bland = false;
    while (iters < kIterCap) {
        // Pricing.
        int q = -1;
        int dir = 0;
        double best = -kOptTol;
        for (int j = 0; j < t.ncols; ++j) {
            if (t.status[j] == VarStatus::Basic || !priceable[j]) continue;
            if (t.lo[j] == t.up[j]) continue;  // fixed column
            double dj = t.d(j);
            double score = 0.0;
            int cand_dir = 0;
            if (t.status[j] == VarStatus::AtLower && dj < -kOptTol) {
                score = dj;
                cand_dir = +1;
            } else if (t.status[j] == VarStatus::AtUpper && dj > kOptTol) {
                score = -dj;
                cand_dir = -1;
            } else {
                continue;
            }
            if (bland) {  // smallest eligible index
                q = j;
                dir = cand_dir;
                break;
            }
            if (score < best) {
                best = score;
                q = j;
                dir = cand_dir;
            }
        }
        if (q < 0) return LpStatus::Optimal;

        PivotOutcome out = step(t, q, dir, bland);
        ++iters;
        if (out.unbounded) return LpStatus::Unbounded;
        if (out.degenerate) {
            if (++degenerate_run > kDegenerateBudget) bland = true;
        } else {
            degenerate_run = 0;
            bland = false;
        }
    }
    return LpStatus::IterLimit;
}

}  // namespace

LpResult solve(const std::vector<double>& objective, bool maximize,
               const std::vector<double>& lower, const std::vector<double>& upper,
               const std::vector<Row>& rows) {
    const int n = static_cast<int>(objective.size());
    const int m = static_cast<int>(rows.size());
    assert(static_cast<int>(lower.size()) == n && static_cast<int>(upper.size()) == n);

    LpResult res;

    // Columns: [0, n) structural, [n, n+m) slacks, then artificials as needed.
    // Row i becomes  a.x + s_i = rhs_i  with s_i in [0, hi - lo]; rhs = hi when
    // hi is finite, otherwise  a.x - s_i = lo  with s_i in [0, inf).
    Tableau t;
    t.m = m;
    t.nstruct = n;
    std::vector<double> rhs(m);
    std::vector<double> slack_coef(m);
    t.lo.assign(n + m, 0.0);
    t.up.assign(n + m, kInf);
    for (int j = 0; j < n; ++j) {
        t.lo[j] = lower[j];
        t.up[j] = upper[j];
        if (t.lo[j] > t.up[j]) return res;  // conflicting fixings: infeasible
    }
    for (int i = 0; i < m; ++i) {
        const Row& r = rows[i];
        assert(r.lo > -kInf || r.hi < kInf);
        if (r.hi < kInf) {
            rhs[i] = r.hi;
            slack_coef[i] = 1.0;
            t.up[n + i] = (r.lo > -kInf) ? r.hi - r.lo : kInf;
        } else {
            rhs[i] = r.lo;
            slack_coef[i] = -1.0;
            t.up[n + i] = kInf;
        }
    }

    // Initial nonbasic structural values: finite lower bound, else upper.
    t.status.assign(n + m, VarStatus::AtLower);
    for (int j = 0; j < n; ++j)
        if (t.lo[j] == -kInf) t.status[j] = VarStatus::AtUpper;

    // Residuals with all structurals at their initial bounds and slacks at 0.
    std::vector<double> resid(rhs);
    for (int i = 0; i < m; ++i)
        for (const Term& term : rows[i].terms) {
            double v = t.status[term.var] == VarStatus::AtUpper ? t.up[term.var]
                                                                : t.lo[term.var];
            resid[i] -= term.coef * v;
        }

    // Choose per-row initial basic column: the slack when its implied value is
    // feasible, otherwise an artificial absorbing the residual.
    t.basis.assign(m, -1);
    std::vector<int> artif_rows;
    std::vector<double> artif_sign;
    for (int i = 0; i < m; ++i) {
        double sv = resid[i] / slack_coef[i];
        if (sv >= -1e-12 && sv <= t.up[n + i] + 1e-12) {
            t.basis[i] = n + i;
        } else {
            artif_rows.push_back(i);
            artif_sign.push_back(resid[i] >= 0 ? 1.0 : -1.0);
        }
    }
    const int na = static_cast<int>(artif_rows.size());
    t.ncols = n + m + na;
    t.lo.resize(t.ncols, 0.0);
    t.up.resize(t.ncols, kInf);
    t.status.resize(t.ncols, VarStatus::AtLower);

    t.T = Eigen::MatrixXd::Zero(m, t.ncols);
    for (int i = 0; i < m; ++i) {
        for (const Term& term : rows[i].terms) t.T(i, term.var) += term.coef;
        t.T(i, n + i) = slack_coef[i];
    }
    for (int k = 0; k < na; ++k) t.T(artif_rows[k], n + m + k) = artif_sign[k];

    t.xB = Eigen::VectorXd::Zero(m);
    for (int k = 0; k < na; ++k) {
        int i = artif_rows[k];
        t.basis[i] = n + m + k;
        t.status[n + m + k] = VarStatus::Basic;
        t.xB(i) = resid[i] * artif_sign[k];
    }
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] == n + i) {
            t.status[n + i] = VarStatus::Basic;
            t.xB(i) = resid[i] / slack_coef[i];
        }
    }
    // Rows whose basic column is the slack with coefficient -1 need scaling so
    // the basis matrix is the identity.
    for (int i = 0; i < m; ++i)
        if (t.basis[i] == n + i && slack_coef[i] < 0) t.T.row(i) *= -1.0;
    // Rows with an artificial of sign -1 likewise.
    for (int k = 0; k < na; ++k)
        if (artif_sign[k] < 0) t.T.row(artif_rows[k]) *= -1.0;

    std::vector<char> priceable(t.ncols, 1);
    int iters = 0;

    // Phase 1: minimize the sum of artificials.
    if (na > 0) {
        Eigen::RowVectorXd c1 = Eigen::RowVectorXd::Zero(t.ncols);
        for (int k = 0; k < na; ++k) c1(n + m + k) = 1.0;
        LpStatus st = optimize(t, c1, iters, priceable);
        res.iterations = iters;
        if (st == LpStatus::IterLimit) {
            res.status = LpStatus::IterLimit;
            return res;
        }
        double infeas = 0.0;
        for (int i = 0; i < m; ++i)
            if (t.basis[i] >= n + m) infeas += t.xB(i);
        if (infeas > kFeasTol) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        // Pin artificials at zero for phase 2.
        for (int k = 0; k < na; ++k) {
            t.up[n + m + k] = 0.0;
            priceable[n + m + k] = 0;
        }
    }

    // Phase 2.
    Eigen::RowVectorXd c = Eigen::RowVectorXd::Zero(t.ncols);
    for (int j = 0; j < n; ++j) c(j) = maximize ? -objective[j] : objective[j];
    LpStatus st = optimize(t, c, iters, priceable);
    res.iterations = iters;
    if (st != LpStatus::Optimal) {
        res.status = st;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.x.assign(n, 0.0);
    for (int j = 0; j < n; ++j) res.x[j] = t.col_value(j);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[t.basis[i]] = t.xB(i);
    double obj = 0.0;
    for (int j = 0; j < n; ++j) obj += objective[j] * res.x[j];
    res.objective = obj;
    return res;
}

}  // namespace lp
}  // namespace polyarea
