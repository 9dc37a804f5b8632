#pragma once

#include <string>

#include "helly/geometry.hpp"
#include "helly/types.hpp"

namespace helly {

enum class CenterMethod { Centroid, Loewner };

std::string to_string(CenterMethod m);

/// An interior point z together with the asymmetry constant of the polar
/// body Q = (K - z)^polar: the minimal lambda with Q inside -lambda Q.
/// For both supported centers, lambda <= d (up to slack).
struct CenterReport {
  Vector z;
  CenterMethod method = CenterMethod::Centroid;
  double lambda = 0.0;
};

/// Volume centroid of K, from the boundary triangulation of its vertex set.
Vector center_centroid(const HPolytope& K, const Tolerance& tol = {});

/// Center of the minimum-volume enclosing ellipsoid of the vertex set
/// (Khachiyan-style multiplicative weight ascent, relative gap 1e-7).
Vector center_loewner(const HPolytope& K, const Tolerance& tol = {});

/// Minimal lambda with Q inside -lambda Q for an origin-interior hull:
/// the max over points p of gauge(Q, -p). At least 1 for any body.
double asymmetry_lambda(const VPolytope& Q, const Tolerance& tol = {});

/// Convenience: pick the center, polarize mentally, report lambda.
CenterReport make_center_report(const HPolytope& K, CenterMethod method,
                                const Tolerance& tol = {});

/// Minimum-volume enclosing ellipsoid { x : (x-c)' A (x-c) <= 1 }.
struct Ellipsoid {
  Vector center;
  Matrix shape;
};

Ellipsoid min_enclosing_ellipsoid(const std::vector<Vector>& points, int dim,
                                  double rel_gap = 1e-7,
                                  int max_iters = 100000);

}  // namespace helly
