#pragma once

#include <string>
#include <utility>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/types.hpp"

namespace helly {

/// A locally-maximal inscribed simplex with the per-point containment
///   Q subset of -d(S - v) + v   (v = centroid of S)
/// checked explicitly over all points of Q.
struct SimplexCertificate {
  std::vector<int> vertices;      // d+1 indices into Q
  Vector v;                       // centroid of S
  bool containment_ok = false;
  double worst_barycentric = 0.0; // most negative coordinate encountered
  bool exhaustive_used = false;
};

enum class SelectionVariant { A2dPlus1, B2d };

std::string to_string(SelectionVariant v);

/// One re-checkable containment record.
struct CertificateEntry {
  std::string name;
  bool pass = false;
  double value = 0.0;   // measured quantity
  double limit = 0.0;   // allowed bound including slack
};

/// Outcome of a Gruenbaum-type selection on a V-polytope Q with
/// Q subset of -lambda Q: at most 2d+1 (variant A) or 2d (variant B)
/// extreme-point indices whose hull absorbs Q after reflection-dilation.
struct GrunbaumSelection {
  SelectionVariant variant = SelectionVariant::A2dPlus1;
  std::vector<int> chosen;        // sorted indices into Q
  double lambda = 0.0;
  double factor = 0.0;            // certified c with Q in -c conv(chosen)
  double measured = 0.0;          // minimal such c, measured per point
  bool degenerate_center = false; // v (or w) at the origin: S alone suffices
  SimplexCertificate simplex;
  Vector v;                       // centroid of S
  Vector w;                       // centroid of S1 (variant B)
  Vector ray_exit;                // q: where the ray from v along v leaves S
  Vector boundary_point;          // y (variant A) or y2 (variant B)
  std::vector<CertificateEntry> certificates;
};

/// Largest-volume inscribed simplex by greedy start plus single-vertex
/// swaps, with the containment of the certificate verified point by point.
/// Falls back to exhaustive search over (d+1)-subsets when verification
/// fails and C(n, d+1) <= 1e6.
SimplexCertificate max_volume_simplex(const VPolytope& Q,
                                      const Tolerance& tol = {});

/// Boundary point y of conv(Q) in direction dir, written as a convex
/// combination of at most d extreme points on one support face
/// (Caratheodory on the face, straight from a basic gauge-LP solution).
struct CaratheodoryPoint {
  Vector y;
  std::vector<int> indices;      // sorted, at most d of them
  std::vector<double> weights;   // same order; nonnegative, sum to 1
};

CaratheodoryPoint caratheodory_boundary(const VPolytope& Q, const Vector& dir,
                                        const Tolerance& tol = {});

GrunbaumSelection select_2d_plus_1(const VPolytope& Q, double lambda,
                                   const Tolerance& tol = {});

GrunbaumSelection select_2d(const VPolytope& Q, double lambda,
                            const Tolerance& tol = {});

}  // namespace helly
