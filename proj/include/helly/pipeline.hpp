#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helly/centers.hpp"
#include "helly/grunbaum.hpp"

namespace helly {

/// Polar point p_i = u_i / (b_i - <u_i, z>) with its originating
/// halfspace index; conv of all p_i is (K - z)^polar.
struct PolarPoint {
  Vector p;
  int source = -1;
};

struct PolarInstance {
  int dim = 0;
  Vector z;
  std::vector<PolarPoint> points;   // one per input halfspace, same order
  std::vector<int> extreme;         // indices into points, sorted

  VPolytope extreme_body() const;
};

/// Polarize K around the strictly interior point z and flag the extreme
/// polar points (these correspond to irredundant halfspaces).
PolarInstance polarize(const HPolytope& K, const Vector& z,
                       const Tolerance& tol = {});

/// Map chosen polar points (indices into the extreme body) back to the
/// smallest originating halfspace indices; result is sorted and unique.
std::vector<int> back_map(const GrunbaumSelection& sel,
                          const PolarInstance& inst,
                          const Tolerance& tol = {});

enum class SelectionMode { Sigma2dPlus1, Mu2d };

std::string to_string(SelectionMode m);

/// Everything the pipeline certifies about one instance.
struct SelectionResult {
  SelectionMode mode = SelectionMode::Mu2d;
  CenterMethod center_method = CenterMethod::Centroid;
  Vector z;
  double lambda = 0.0;
  std::vector<int> indices;              // sigma or mu
  double certified_factor = 0.0;
  double measured_factor = 0.0;
  double dimension_cap = 0.0;            // 4d^2 or 8d^3
  double diam_ratio = 0.0;
  std::optional<double> vol_ratio;       // computed when d <= 4
  bool subfamily_bounded = false;
  GrunbaumSelection selection;
  std::vector<CertificateEntry> certificates;
};

/// Center -> polarize -> asymmetry -> select -> back-map -> verify.
/// Verifies the homothetic containment vertex by vertex, plus the
/// diameter (and, at d <= 4, volume) ratios it implies.
SelectionResult run_pipeline(const HPolytope& K, SelectionMode mode,
                             CenterMethod center_method,
                             const Tolerance& tol = {});

/// Minimal c > 0 with inner - z inside -c (outer - z), computed in closed
/// form from halfspace slacks at the vertices of inner.
double homothetic_factor(const VPolytope& inner, const HPolytope& outer,
                         const Vector& z, const Tolerance& tol = {});
double homothetic_factor(const HPolytope& inner, const HPolytope& outer,
                         const Vector& z, const Tolerance& tol = {});

}  // namespace helly
