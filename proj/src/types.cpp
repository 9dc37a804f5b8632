#include "helly/types.hpp"

#include <cmath>

namespace helly {

void Tolerance::validate() const {
  if (!(eps_rel > 0.0) || !(eps_rel < 1e-3))
    throw PreconditionError("Tolerance.eps_rel must lie in (0, 1e-3)");
  if (!(containment_slack > 0.0) || !(containment_slack < 1e-3))
    throw PreconditionError("Tolerance.containment_slack must lie in (0, 1e-3)");
}

HPolytope::HPolytope(int d, std::vector<Halfspace> hs)
    : dim(d), halfspaces(std::move(hs)) {
  validate();
}

void HPolytope::validate() const {
  if (dim < 2) throw PreconditionError("HPolytope: dimension must be >= 2");
  if (halfspaces.empty())
    throw PreconditionError("HPolytope: halfspace list is empty");
  for (const Halfspace& h : halfspaces) {
    if (h.normal.size() != dim)
      throw PreconditionError("HPolytope: normal dimension mismatch");
    if (!h.normal.allFinite() || !std::isfinite(h.offset))
      throw PreconditionError("HPolytope: non-finite entry");
    if (h.normal.lpNorm<Eigen::Infinity>() == 0.0)
      throw PreconditionError("HPolytope: zero normal vector");
  }
}

VPolytope::VPolytope(int d, std::vector<Vector> pts)
    : dim(d), points(std::move(pts)) {
  validate();
}

void VPolytope::validate() const {
  if (dim < 2) throw PreconditionError("VPolytope: dimension must be >= 2");
  if (points.empty()) throw PreconditionError("VPolytope: point list is empty");
  for (const Vector& p : points) {
    if (p.size() != dim)
      throw PreconditionError("VPolytope: point dimension mismatch");
    if (!p.allFinite()) throw PreconditionError("VPolytope: non-finite entry");
  }
}

double scale_of(const Vector& v) {
  return 1.0 + v.lpNorm<Eigen::Infinity>();
}

}  // namespace helly
