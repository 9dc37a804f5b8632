#pragma once

#include <vector>

#include "helly/types.hpp"

namespace helly {

enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class RowSense { LE, GE, EQ };

/// Dense linear program: optimize objective . x subject to the rows.
/// Variables are free by default; set nonneg[j] to constrain x_j >= 0.
struct LPProblem {
  int num_vars = 0;
  bool maximize = true;
  Vector objective;
  std::vector<Vector> row_coeffs;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<bool> nonneg;

  explicit LPProblem(int nvars)
      : num_vars(nvars),
        objective(Vector::Zero(nvars)),
        nonneg(static_cast<std::size_t>(nvars), false) {}

  void add_row(const Vector& a, RowSense s, double b) {
    row_coeffs.push_back(a);
    senses.push_back(s);
    rhs.push_back(b);
  }

  int num_rows() const { return static_cast<int>(row_coeffs.size()); }
};

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Vector point;             // defined when status == Optimal
  double value = 0.0;       // objective at point
  std::vector<int> tight_rows;  // rows active at point, within tolerance
};

/// Two-phase dense simplex. Dantzig pricing with a switch to Bland's rule
/// when the objective stalls, so degenerate faces cannot cycle.
/// Throws NumericalError if the iteration cap is exhausted.
LPSolution solve_lp(const LPProblem& p, const Tolerance& tol = {});

}  // namespace helly
