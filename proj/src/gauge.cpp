#include <cmath>

#include "helly/geometry.hpp"

namespace helly {

std::optional<GaugeSolution> hull_gauge_solution(
    const std::vector<Vector>& points, const Vector& x, const Tolerance& tol) {
  if (points.empty()) throw PreconditionError("hull_gauge: no points");
  const int d = static_cast<int>(x.size());
  const int m = static_cast<int>(points.size());
  if (x.lpNorm<Eigen::Infinity>() == 0.0)
    return GaugeSolution{0.0, Vector::Zero(m)};

  LPProblem lp(m);
  lp.maximize = false;
  lp.objective = Vector::Ones(m);
  lp.nonneg.assign(m, true);
  for (int r = 0; r < d; ++r) {
    Vector row(m);
    for (int j = 0; j < m; ++j) row[j] = points[j][r];
    lp.add_row(row, RowSense::EQ, x[r]);
  }
  const LPSolution s = solve_lp(lp, tol);
  if (s.status != LPStatus::Optimal) return std::nullopt;
  GaugeSolution g;
  g.value = std::max(0.0, s.value);
  g.weights = s.point;
  return g;
}

std::optional<double> hull_gauge(const std::vector<Vector>& points,
                                 const Vector& x, const Tolerance& tol) {
  const auto g = hull_gauge_solution(points, x, tol);
  if (!g) return std::nullopt;
  return g->value;
}

double gauge(const VPolytope& P, const Vector& x, const Tolerance& tol) {
  P.validate();
  if (x.size() != P.dim) throw PreconditionError("gauge: dimension mismatch");
  const auto g = hull_gauge(P.points, x, tol);
  if (!g) {
    if (!origin_interior_to_hull(P.points, P.dim, tol))
      throw NotInteriorError("gauge: origin is not interior to conv(P)");
    throw NumericalError("gauge: absorption LP infeasible for interior origin");
  }
  return *g;
}

std::pair<Vector, double> ray_boundary(const VPolytope& P, const Vector& dir,
                                       const Tolerance& tol) {
  if (dir.lpNorm<Eigen::Infinity>() == 0.0)
    throw PreconditionError("ray_boundary: zero direction");
  const double g = gauge(P, dir, tol);
  if (!(g > 0.0)) {
    // Only possible when the origin is not interior (the gauge of a
    // nonzero direction over a bounded hull with interior origin is
    // strictly positive).
    throw NotInteriorError("ray_boundary: origin is not interior to conv(P)");
  }
  const double t = 1.0 / g;
  return {t * dir, t};
}

}  // namespace helly
