#include "helly/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace helly {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-9;
constexpr int kIterationCap = 50000;

struct Tableau {
  // Rows 0..m-1 are constraints, row m is the objective (z - c form).
  // Column layout: structural (split) columns, then slack/surplus, then
  // artificial, then the rhs column.
  Matrix t;
  std::vector<int> basis;       // basic column per constraint row
  int m = 0;
  int ncols = 0;                // excludes rhs column
  int first_artificial = 0;     // columns >= this may never enter

  double& at(int i, int j) { return t(i, j); }
  double rhs(int i) const { return t(i, ncols); }

  void pivot(int r, int e) {
    const double piv = t(r, e);
    t.row(r) /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == r) continue;
      const double f = t(i, e);
      if (f != 0.0) t.row(i) -= f * t.row(r);
    }
    basis[r] = e;
  }

  // Returns true on optimal, false on unbounded.
  bool run(int stall_limit) {
    int iters_since_improve = 0;
    double last = t(m, ncols);
    for (int iter = 0; iter < kIterationCap; ++iter) {
      const bool bland = iters_since_improve > stall_limit;
      int e = -1;
      if (bland) {
        for (int j = 0; j < first_artificial; ++j) {
          if (t(m, j) < -kCostEps) { e = j; break; }
        }
      } else {
        double best = -kCostEps;
        for (int j = 0; j < first_artificial; ++j) {
          if (t(m, j) < best) { best = t(m, j); e = j; }
        }
      }
      if (e < 0) return true;

      int r = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double a = t(i, e);
        if (a <= kPivotEps) continue;
        const double ratio = t(i, ncols) / a;
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && (r < 0 || basis[i] < basis[r]))) {
          best_ratio = ratio;
          r = i;
        }
      }
      if (r < 0) return false;

      pivot(r, e);
      const double cur = t(m, ncols);
      if (cur > last + 1e-13 * (1.0 + std::fabs(last))) {
        last = cur;
        iters_since_improve = 0;
      } else {
        ++iters_since_improve;
      }
    }
    throw NumericalError("solve_lp: simplex iteration cap exhausted");
  }

  void price_out_basics() {
    for (int i = 0; i < m; ++i) {
      const double c = t(m, basis[i]);
      if (c != 0.0) t.row(m) -= c * t.row(i);
    }
  }
};

}  // namespace

LPSolution solve_lp(const LPProblem& p, const Tolerance& tol) {
  const int n = p.num_vars;
  const int m = p.num_rows();
  if (n <= 0) throw PreconditionError("solve_lp: no variables");
  if (m <= 0) throw PreconditionError("solve_lp: no rows");

  // Structural columns: one for a nonnegative variable, a split pair
  // x = x+ - x- for a free one.
  std::vector<int> pos_col(n), neg_col(n, -1);
  int ncols = 0;
  for (int j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    if (!p.nonneg[j]) neg_col[j] = ncols++;
  }
  const int first_slack = ncols;
  for (int i = 0; i < m; ++i)
    if (p.senses[i] != RowSense::EQ) ++ncols;
  const int first_artificial = ncols;

  // Row scaling keeps pivot tolerances meaningful across instances.
  std::vector<double> row_scale(m);
  std::vector<double> scaled_rhs(m);
  std::vector<int> row_sign(m, 1);
  for (int i = 0; i < m; ++i) {
    if (p.row_coeffs[i].size() != n)
      throw PreconditionError("solve_lp: row dimension mismatch");
    double s = p.row_coeffs[i].lpNorm<Eigen::Infinity>();
    if (s <= 0.0) s = 1.0;
    row_scale[i] = s;
    scaled_rhs[i] = p.rhs[i] / s;
  }

  // Count artificial columns: every row gets one unless a +1 slack can be
  // basic (an LE row whose scaled rhs ends up nonnegative).
  int nart = 0;
  {
    for (int i = 0; i < m; ++i) {
      RowSense sense = p.senses[i];
      double b = scaled_rhs[i];
      bool negate = b < 0.0;
      RowSense eff = sense;
      if (negate && sense != RowSense::EQ)
        eff = (sense == RowSense::LE) ? RowSense::GE : RowSense::LE;
      if (eff != RowSense::LE) ++nart;
    }
  }

  Tableau tab;
  tab.m = m;
  tab.ncols = first_artificial + nart;
  tab.first_artificial = first_artificial;
  tab.t = Matrix::Zero(m + 1, tab.ncols + 1);
  tab.basis.assign(m, -1);

  int slack_cursor = first_slack;
  int art_cursor = first_artificial;
  for (int i = 0; i < m; ++i) {
    double b = scaled_rhs[i];
    if (b < 0.0) {
      row_sign[i] = -1;
      b = -b;
    }
    for (int j = 0; j < n; ++j) {
      const double a = row_sign[i] * p.row_coeffs[i][j] / row_scale[i];
      tab.t(i, pos_col[j]) = a;
      if (neg_col[j] >= 0) tab.t(i, neg_col[j]) = -a;
    }
    tab.t(i, tab.ncols) = b;

    RowSense eff = p.senses[i];
    if (row_sign[i] < 0 && eff != RowSense::EQ)
      eff = (eff == RowSense::LE) ? RowSense::GE : RowSense::LE;
    if (eff == RowSense::LE) {
      tab.t(i, slack_cursor) = 1.0;
      tab.basis[i] = slack_cursor++;
    } else {
      if (eff == RowSense::GE) tab.t(i, slack_cursor++) = -1.0;
      tab.t(i, art_cursor) = 1.0;
      tab.basis[i] = art_cursor++;
    }
  }

  const int stall_limit = 100 + 10 * (m + n);

  // Phase 1: maximize minus the sum of artificials.
  bool need_phase1 = art_cursor > first_artificial;
  if (need_phase1) {
    for (int j = first_artificial; j < tab.ncols; ++j) tab.t(m, j) = 1.0;
    tab.price_out_basics();
    // Artificials must be allowed to move during phase 1; they are already
    // basic, and only basic columns leave, so the entering scan can stay
    // restricted to structural and slack columns.
    tab.run(stall_limit);
    const double art_sum = -tab.t(m, tab.ncols);
    double feas_scale = 1.0;
    for (int i = 0; i < m; ++i)
      feas_scale = std::max(feas_scale, std::fabs(scaled_rhs[i]));
    if (art_sum > 1e-8 * feas_scale) {
      LPSolution sol;
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    // Pivot basic artificials out where possible; a row with no eligible
    // pivot is redundant and its artificial stays parked at zero.
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] < first_artificial) continue;
      int e = -1;
      double best = kPivotEps;
      for (int j = 0; j < first_artificial; ++j) {
        if (std::fabs(tab.t(i, j)) > best) {
          best = std::fabs(tab.t(i, j));
          e = j;
        }
      }
      if (e >= 0) tab.pivot(i, e);
    }
  }

  // Phase 2: the real objective.
  tab.t.row(m).setZero();
  const double obj_sign = p.maximize ? 1.0 : -1.0;
  for (int j = 0; j < n; ++j) {
    const double c = obj_sign * p.objective[j];
    tab.t(m, pos_col[j]) = -c;
    if (neg_col[j] >= 0) tab.t(m, neg_col[j]) = c;
  }
  tab.price_out_basics();
  const bool optimal = tab.run(stall_limit);

  LPSolution sol;
  if (!optimal) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }
  sol.status = LPStatus::Optimal;
  sol.point = Vector::Zero(n);
  std::vector<int> col_var(tab.ncols, -1);
  std::vector<double> col_sign(tab.ncols, 0.0);
  for (int j = 0; j < n; ++j) {
    col_var[pos_col[j]] = j;
    col_sign[pos_col[j]] = 1.0;
    if (neg_col[j] >= 0) {
      col_var[neg_col[j]] = j;
      col_sign[neg_col[j]] = -1.0;
    }
  }
  for (int i = 0; i < m; ++i) {
    const int col = tab.basis[i];
    if (col_var[col] >= 0)
      sol.point[col_var[col]] += col_sign[col] * tab.t(i, tab.ncols);
  }
  sol.value = p.objective.dot(sol.point);
  for (int i = 0; i < m; ++i) {
    const double lhs = p.row_coeffs[i].dot(sol.point);
    const double s =
        row_scale[i] * (1.0 + sol.point.lpNorm<Eigen::Infinity>()) +
        std::fabs(p.rhs[i]);
    if (std::fabs(lhs - p.rhs[i]) <= 1e3 * tol.eps_rel * s)
      sol.tight_rows.push_back(i);
  }
  return sol;
}

}  // namespace helly
