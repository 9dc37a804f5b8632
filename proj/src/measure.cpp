#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {
namespace {

// Boundary triangulation from facet incidence alone.
//
// Every face is identified by its sorted vertex-index set. A k-face is
// fanned from its lowest-index vertex over those of its (k-1)-subfaces
// that avoid the apex; subfaces are the maximal proper intersections of
// the face with the facet incidence sets. The recursion bottoms out at
// simplices and needs no coordinates, so non-simplicial and degenerate
// facets are handled uniformly.
class FaceTriangulator {
 public:
  FaceTriangulator(const std::vector<std::vector<int>>& facet_members)
      : facet_members_(facet_members) {}

  const std::vector<std::vector<int>>& triangulate(
      const std::vector<int>& face, int k) {
    const auto key = std::make_pair(k, face);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<std::vector<int>> tris;
    if (static_cast<int>(face.size()) == k + 1) {
      tris.push_back(face);
    } else if (k == 0) {
      tris.push_back({face[0]});
    } else {
      const int apex = face[0];
      for (const std::vector<int>& child : children(face)) {
        if (static_cast<int>(child.size()) < k) continue;
        if (std::binary_search(child.begin(), child.end(), apex)) continue;
        for (const std::vector<int>& sub : triangulate(child, k - 1)) {
          std::vector<int> t;
          t.reserve(sub.size() + 1);
          t.push_back(apex);
          t.insert(t.end(), sub.begin(), sub.end());
          tris.push_back(std::move(t));
        }
      }
    }
    return memo_.emplace(key, std::move(tris)).first->second;
  }

 private:
  std::vector<std::vector<int>> children(const std::vector<int>& face) {
    std::set<std::vector<int>> cand;
    std::vector<int> inter;
    for (const std::vector<int>& fm : facet_members_) {
      inter.clear();
      std::set_intersection(face.begin(), face.end(), fm.begin(), fm.end(),
                            std::back_inserter(inter));
      if (!inter.empty() && inter.size() < face.size()) cand.insert(inter);
    }
    std::vector<std::vector<int>> out;
    for (const std::vector<int>& c : cand) {
      bool maximal = true;
      for (const std::vector<int>& o : cand) {
        if (o.size() > c.size() &&
            std::includes(o.begin(), o.end(), c.begin(), c.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(c);
    }
    return out;
  }

  const std::vector<std::vector<int>>& facet_members_;
  std::map<std::pair<int, std::vector<int>>, std::vector<std::vector<int>>>
      memo_;
};

double factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace

BodyMeasure measure_from_facets(const std::vector<Vector>& points,
                                const std::vector<HullFacet>& facets,
                                int dim, const Tolerance& tol) {
  (void)tol;
  if (points.empty()) throw DegenerateError("measure: no points");
  Vector mean = Vector::Zero(dim);
  for (const Vector& p : points) mean += p;
  mean /= static_cast<double>(points.size());

  std::vector<std::vector<int>> members;
  members.reserve(facets.size());
  for (const HullFacet& f : facets) {
    std::vector<int> inc = f.incident;
    std::sort(inc.begin(), inc.end());
    members.push_back(std::move(inc));
  }

  FaceTriangulator tri(members);
  Matrix edges(dim, dim);
  double vol = 0.0;
  Vector weighted = Vector::Zero(dim);
  const double dfact = factorial(dim);
  for (const std::vector<int>& face : members) {
    if (static_cast<int>(face.size()) < dim) continue;   // sliver / redundant
    for (const std::vector<int>& t : tri.triangulate(face, dim - 1)) {
      Vector csum = mean;
      for (int k = 0; k < dim; ++k) {
        edges.col(k) = points[t[k]] - mean;
        csum += points[t[k]];
      }
      const double v = std::fabs(edges.determinant()) / dfact;
      vol += v;
      weighted += v * (csum / (dim + 1.0));
    }
  }
  if (!(vol > 0.0))
    throw DegenerateError("measure: zero volume (degenerate body)");
  BodyMeasure m;
  m.volume = vol;
  m.centroid = weighted / vol;
  return m;
}

BodyMeasure measure_hpolytope(const HPolytope& K, const VPolytope& vertices,
                              const Tolerance& tol) {
  const int d = K.dim;
  std::vector<HullFacet> facets;
  facets.reserve(K.halfspaces.size());
  for (const Halfspace& h : K.halfspaces) {
    const double nn = h.normal.norm();
    HullFacet f;
    f.normal = h.normal / nn;
    f.offset = h.offset / nn;
    for (int i = 0; i < vertices.size(); ++i) {
      const double slack = f.offset - f.normal.dot(vertices.points[i]);
      const double eps =
          100.0 * tol.eps_rel * (1.0 + std::fabs(f.offset) +
                                 vertices.points[i].norm());
      if (std::fabs(slack) <= eps) f.incident.push_back(i);
    }
    if (static_cast<int>(f.incident.size()) >= d) facets.push_back(std::move(f));
  }
  return measure_from_facets(vertices.points, facets, d, tol);
}

double volume(const VPolytope& P, const Tolerance& tol) {
  return measure_from_facets(P.points, hull_facets(P, tol), P.dim, tol).volume;
}

Vector centroid_of_hull(const VPolytope& P, const Tolerance& tol) {
  return measure_from_facets(P.points, hull_facets(P, tol), P.dim, tol)
      .centroid;
}

double diameter(const VPolytope& P) {
  P.validate();
  double best = 0.0;
  for (int i = 0; i < P.size(); ++i) {
    for (int j = i + 1; j < P.size(); ++j) {
      best = std::max(best, (P.points[i] - P.points[j]).squaredNorm());
    }
  }
  return std::sqrt(best);
}

}  // namespace helly
