#include <algorithm>
#include <cmath>
#include <set>

#include "helly/pipeline.hpp"

namespace helly {
namespace {

// Gauge of -(x - z) in K - z from halfspace slacks: the minimal c with
// -(x - z)/c feasible for every halfspace.
double reflection_gauge(const HPolytope& K, const Vector& z, const Vector& x) {
  double c = 0.0;
  for (const Halfspace& h : K.halfspaces) {
    const double s = h.offset - h.normal.dot(z);
    if (!(s > 0.0))
      throw NotInteriorError("reflection_gauge: z not strictly interior");
    const double num = -h.normal.dot(x - z);
    if (num > 0.0) c = std::max(c, num / s);
  }
  return c;
}

HPolytope subfamily(const HPolytope& K, const std::vector<int>& idx) {
  std::vector<Halfspace> hs;
  hs.reserve(idx.size());
  for (int i : idx) hs.push_back(K.halfspaces[i]);
  return HPolytope(K.dim, std::move(hs));
}

}  // namespace

std::string to_string(SelectionMode m) {
  return m == SelectionMode::Mu2d ? "2d" : "2d+1";
}

VPolytope PolarInstance::extreme_body() const {
  std::vector<Vector> pts;
  pts.reserve(extreme.size());
  for (int i : extreme) pts.push_back(points[i].p);
  return VPolytope(dim, std::move(pts));
}

PolarInstance polarize(const HPolytope& K, const Vector& z,
                       const Tolerance& tol) {
  K.validate();
  if (z.size() != K.dim) throw PreconditionError("polarize: dim mismatch");
  PolarInstance inst;
  inst.dim = K.dim;
  inst.z = z;
  inst.points.reserve(K.size());
  for (int i = 0; i < K.size(); ++i) {
    const Halfspace& h = K.halfspaces[i];
    const double s = h.offset - h.normal.dot(z);
    const double eps =
        tol.eps_rel * (1.0 + std::fabs(h.offset) + h.normal.norm() * scale_of(z));
    if (s <= eps)
      throw NotInteriorError("polarize: z is not strictly interior to K");
    inst.points.push_back({h.normal / s, i});
  }
  // A polar point is extreme exactly when its halfspace is irredundant in
  // K - z. Deciding that in the primal keeps the test well-scaled even
  // when the polar hull collapses toward the origin (elongated bodies).
  // Duplicated halfspaces form one cluster whose smallest index stands in
  // for all of them; a cluster is measured against the other clusters only.
  std::vector<int> rep(K.size());
  for (int i = 0; i < K.size(); ++i) {
    rep[i] = i;
    for (int j = 0; j < i; ++j) {
      if ((inst.points[i].p - inst.points[j].p).lpNorm<Eigen::Infinity>() <=
          10.0 * tol.eps_rel * scale_of(inst.points[j].p)) {
        rep[i] = rep[j];
        break;
      }
    }
  }
  for (int i = 0; i < K.size(); ++i) {
    if (rep[i] != i) continue;
    const Halfspace& h = K.halfspaces[i];
    const double nn = h.normal.norm();
    LPProblem lp(K.dim);
    lp.objective = h.normal / nn;
    int other_rows = 0;
    for (int j = 0; j < K.size(); ++j) {
      if (rep[j] == i) continue;
      const double njn = K.halfspaces[j].normal.norm();
      lp.add_row(K.halfspaces[j].normal / njn, RowSense::LE,
                 K.halfspaces[j].offset / njn);
      ++other_rows;
    }
    if (other_rows == 0) {
      inst.extreme.push_back(i);
      continue;
    }
    const LPSolution s = solve_lp(lp, tol);
    const double b = h.offset / nn;
    if (s.status == LPStatus::Unbounded ||
        (s.status == LPStatus::Optimal &&
         s.value > b + 10.0 * tol.eps_rel * (1.0 + std::fabs(b) +
                                             std::fabs(s.value))))
      inst.extreme.push_back(i);
  }

  // The origin is interior to the polar hull exactly when K - z is
  // bounded; a failure here means the input was not a convex body.
  std::vector<Vector> ext;
  for (int i : inst.extreme) ext.push_back(inst.points[i].p);
  if (!origin_interior_to_hull(ext, K.dim, tol))
    throw UnboundedError("polarize: origin not interior to the polar hull");
  return inst;
}

std::vector<int> back_map(const GrunbaumSelection& sel,
                          const PolarInstance& inst, const Tolerance& tol) {
  std::set<int> sigma;
  for (int c : sel.chosen) {
    if (c < 0 || c >= static_cast<int>(inst.extreme.size()))
      throw PreconditionError("back_map: chosen index out of range");
    const Vector& p = inst.points[inst.extreme[c]].p;
    const double r = 10.0 * tol.eps_rel * scale_of(p);
    int found = -1;
    for (const PolarPoint& pp : inst.points) {
      if ((pp.p - p).lpNorm<Eigen::Infinity>() <= r) {
        found = pp.source;    // input order: first hit is the smallest index
        break;
      }
    }
    if (found < 0)
      throw NumericalError("back_map: chosen point matches no polar point");
    sigma.insert(found);
  }
  return {sigma.begin(), sigma.end()};
}

SelectionResult run_pipeline(const HPolytope& K, SelectionMode mode,
                             CenterMethod center_method, const Tolerance& tol) {
  K.validate();
  const int d = K.dim;
  const double dd = d;

  // Hypothesis: K is a convex body. enumerate_vertices screens
  // boundedness and full dimension and throws otherwise.
  const VPolytope vk = enumerate_vertices(K, tol);

  SelectionResult res;
  res.mode = mode;
  res.center_method = center_method;
  res.z = (center_method == CenterMethod::Centroid)
              ? measure_hpolytope(K, vk, tol).centroid
              : min_enclosing_ellipsoid(vk.points, d).center;

  PolarInstance inst = polarize(K, res.z, tol);
  const VPolytope q = inst.extreme_body();
  res.lambda = asymmetry_lambda(q, tol);

  res.selection = (mode == SelectionMode::Mu2d)
                      ? select_2d(q, res.lambda, tol)
                      : select_2d_plus_1(q, res.lambda, tol);
  res.indices = back_map(res.selection, inst, tol);
  res.certified_factor = res.selection.factor;
  res.dimension_cap = (mode == SelectionMode::Mu2d) ? 8.0 * dd * dd * dd
                                                    : 4.0 * dd * dd;

  auto entry = [&](const std::string& name, double value, double limit) {
    res.certificates.push_back({name, value <= limit, value, limit});
    if (!(value <= limit))
      throw CertificateError("pipeline certificate failed: " + name);
  };

  const int max_size = (mode == SelectionMode::Mu2d) ? 2 * d : 2 * d + 1;
  entry("subfamily_size", static_cast<double>(res.indices.size()),
        static_cast<double>(max_size));

  const HPolytope ks = subfamily(K, res.indices);
  const BoundednessReport sub_rep = check_bounded_full_dim(ks, tol);
  res.subfamily_bounded = sub_rep.bounded;
  res.certificates.push_back({"subfamily_bounded", sub_rep.bounded,
                              sub_rep.bounded ? 1.0 : 0.0, 1.0});
  if (!sub_rep.bounded)
    throw CertificateError(
        "pipeline: selected subfamily is unbounded (certificate broken)");

  const VPolytope vs = enumerate_vertices(ks, tol);

  // Vertex-by-vertex homothetic containment at the certified factor, and
  // the measured minimal factor from the same slacks.
  double measured = 0.0;
  double worst_violation = 0.0;
  for (const Vector& x : vs.points) {
    const double c = reflection_gauge(K, res.z, x);
    measured = std::max(measured, c);
    worst_violation =
        std::max(worst_violation, c / res.certified_factor - 1.0);
  }
  res.measured_factor = measured;
  entry("vertex_membership_at_certified_factor", worst_violation,
        tol.containment_slack);
  entry("measured_factor_within_certified", res.measured_factor,
        res.certified_factor * (1.0 + tol.containment_slack));
  entry("certified_factor_within_dimension_cap", res.certified_factor,
        res.dimension_cap * (1.0 + tol.containment_slack));

  res.diam_ratio = diameter(vs) / diameter(vk);
  entry("diameter_ratio_within_certified_factor", res.diam_ratio,
        res.certified_factor * (1.0 + tol.containment_slack));

  if (d <= 4) {
    const double vol_k = measure_hpolytope(K, vk, tol).volume;
    const double vol_s = measure_hpolytope(ks, vs, tol).volume;
    res.vol_ratio = vol_s / vol_k;
    entry("volume_ratio_within_certified_factor", *res.vol_ratio,
          std::pow(res.certified_factor * (1.0 + tol.containment_slack),
                   static_cast<double>(d)));
  }
  return res;
}

double homothetic_factor(const VPolytope& inner, const HPolytope& outer,
                         const Vector& z, const Tolerance&) {
  inner.validate();
  outer.validate();
  double c = 0.0;
  for (const Vector& x : inner.points)
    c = std::max(c, reflection_gauge(outer, z, x));
  return c;
}

double homothetic_factor(const HPolytope& inner, const HPolytope& outer,
                         const Vector& z, const Tolerance& tol) {
  return homothetic_factor(enumerate_vertices(inner, tol), outer, z, tol);
}

}  // namespace helly
