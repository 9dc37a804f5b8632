#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "helly/lp.hpp"
#include "helly/types.hpp"

namespace helly {

/// Result of the bounded / full-dimensional screen every certified
/// operation runs first ("is a convex body" is a hypothesis, not a hope).
struct BoundednessReport {
  bool bounded = false;
  bool full_dim = false;
  double inradius = 0.0;      // Chebyshev inradius, capped at 1
  Vector chebyshev_center;    // defined when full_dim
};

BoundednessReport check_bounded_full_dim(const HPolytope& K,
                                         const Tolerance& tol = {});

/// All vertices of a bounded, full-dimensional H-polytope, by solving every
/// d-subset of constraints and keeping feasible, deduplicated solutions.
/// Output is sorted lexicographically.
/// Throws UnboundedError / DegenerateError when the hypotheses fail.
VPolytope enumerate_vertices(const HPolytope& K, const Tolerance& tol = {});

/// One facet of a convex hull: outward normal (unit length), offset, and
/// the indices of input points lying on it.
struct HullFacet {
  Vector normal;
  double offset = 0.0;
  std::vector<int> incident;
};

/// Facet description of conv(points) by exhaustive search over d-subsets.
/// Intended for the small point sets this pipeline produces; throws
/// NumericalError if C(n, d) exceeds the desk-scale cap.
std::vector<HullFacet> hull_facets(const VPolytope& P,
                                   const Tolerance& tol = {});

/// Volume and centroid of a polytope known by both representations.
/// The boundary is triangulated recursively from the facet incidence data
/// and coned over the vertex mean.
struct BodyMeasure {
  double volume = 0.0;
  Vector centroid;
};

BodyMeasure measure_from_facets(const std::vector<Vector>& points,
                                const std::vector<HullFacet>& facets,
                                int dim, const Tolerance& tol = {});

/// Same, for an H-polytope with known vertex set (its own halfspaces
/// provide the facet structure, no hull search needed).
BodyMeasure measure_hpolytope(const HPolytope& K, const VPolytope& vertices,
                              const Tolerance& tol = {});

double volume(const VPolytope& P, const Tolerance& tol = {});
Vector centroid_of_hull(const VPolytope& P, const Tolerance& tol = {});

/// Max pairwise distance between points (attained at hull vertices).
double diameter(const VPolytope& P);

/// min { t >= 0 : x in t * conv(points) } via the LP
///   minimize sum(gamma) s.t. sum(gamma_j p_j) = x, gamma >= 0,
/// or nullopt when x is in no dilate (the LP is infeasible).
/// Exact whenever the origin lies in conv(points).
std::optional<double> hull_gauge(const std::vector<Vector>& points,
                                 const Vector& x, const Tolerance& tol = {});

/// hull_gauge together with the optimal combination weights gamma.
/// The simplex method returns a basic solution, so at most dim(x) of the
/// weights are positive and the positive ones lie on one support face.
struct GaugeSolution {
  double value = 0.0;
  Vector weights;
};

std::optional<GaugeSolution> hull_gauge_solution(
    const std::vector<Vector>& points, const Vector& x,
    const Tolerance& tol = {});

/// Minkowski gauge of conv(P) at x. Requires the origin strictly inside;
/// throws NotInteriorError otherwise.
double gauge(const VPolytope& P, const Vector& x, const Tolerance& tol = {});

/// Boundary point of conv(P) along a ray from the (interior) origin:
/// returns (y, t) with y = t * dir on the boundary, t = 1 / gauge(P, dir).
std::pair<Vector, double> ray_boundary(const VPolytope& P, const Vector& dir,
                                       const Tolerance& tol = {});

/// Indices i with p_i outside conv(all other points), smallest-index
/// representative kept for duplicated points. Sorted ascending.
std::vector<int> extreme_points(const VPolytope& P, const Tolerance& tol = {});

/// True iff the origin is strictly inside conv(points), decided by
/// boundedness of the dual H-polytope { x : p_j . x <= 1 }.
bool origin_interior_to_hull(const std::vector<Vector>& points, int dim,
                             const Tolerance& tol = {});

}  // namespace helly
