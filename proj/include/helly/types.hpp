#pragma once

#include <Eigen/Dense>
#include <vector>

#include "helly/errors.hpp"

namespace helly {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Numerical thresholds shared across the library.
///
/// eps_rel drives scale-aware comparisons (vertex dedup, tightness,
/// rank decisions); containment_slack is the slack allowed when a
/// containment certificate is re-checked.
struct Tolerance {
  double eps_rel = 1e-9;
  double containment_slack = 1e-7;

  void validate() const;
};

/// One closed halfspace { x : <normal, x> <= offset }.
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

/// Intersection of finitely many halfspaces in R^d (H-representation).
struct HPolytope {
  int dim = 0;
  std::vector<Halfspace> halfspaces;

  HPolytope() = default;
  HPolytope(int d, std::vector<Halfspace> hs);

  int size() const { return static_cast<int>(halfspaces.size()); }
  void validate() const;
};

/// Convex hull of finitely many points in R^d (V-representation).
struct VPolytope {
  int dim = 0;
  std::vector<Vector> points;

  VPolytope() = default;
  VPolytope(int d, std::vector<Vector> pts);

  int size() const { return static_cast<int>(points.size()); }
  void validate() const;
};

/// Scale proxy used by relative comparisons: 1 + ||v||_inf.
double scale_of(const Vector& v);

}  // namespace helly
