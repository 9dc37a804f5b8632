#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {
namespace {

double binomial_capped(int n, int k, double cap) {
  double v = 1.0;
  for (int i = 0; i < k; ++i) {
    v *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (v > cap) return cap + 1.0;
  }
  return v;
}

int affine_rank(const std::vector<Vector>& pts, int d, double eps) {
  const int m = static_cast<int>(pts.size());
  if (m <= 1) return 0;
  Vector mean = Vector::Zero(d);
  for (const Vector& p : pts) mean += p;
  mean /= m;
  Matrix c(m, d);
  for (int i = 0; i < m; ++i) c.row(i) = (pts[i] - mean).transpose();
  Eigen::JacobiSVD<Matrix> svd(c);
  const auto& sv = svd.singularValues();
  const double thresh = eps * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > thresh) ++r;
  return r;
}

}  // namespace

std::vector<HullFacet> hull_facets(const VPolytope& P, const Tolerance& tol) {
  P.validate();
  const int d = P.dim;
  const int m = P.size();
  if (m < d + 1 || affine_rank(P.points, d, 1e-10) < d)
    throw DegenerateError("hull_facets: points do not affinely span R^d");
  if (binomial_capped(m, d, 2e7) > 2e7)
    throw NumericalError("hull_facets: point set too large for subset search");

  double coord_scale = 1.0;
  for (const Vector& p : P.points)
    coord_scale = std::max(coord_scale, p.lpNorm<Eigen::Infinity>());
  const double side_eps = 10.0 * tol.eps_rel * coord_scale;

  // Facets are keyed by their incident vertex set, which identifies a face
  // uniquely; coplanar d-subsets of a non-simplicial facet all collapse
  // onto one entry.
  std::map<std::vector<int>, HullFacet> found;

  Matrix diffs(d - 1, d);
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  while (true) {
    // Hyperplane through the chosen points.
    Vector base = P.points[comb[0]];
    for (int k = 1; k < d; ++k)
      diffs.row(k - 1) = (P.points[comb[k]] - base).transpose();
    bool usable = false;
    Vector normal;
    {
      Eigen::FullPivLU<Matrix> lu(diffs);
      lu.setThreshold(1e-10);
      if (lu.dimensionOfKernel() == 1) {
        normal = lu.kernel().col(0);
        normal.normalize();
        usable = true;
      }
    }
    if (usable) {
      double offset = 0.0;
      for (int k = 0; k < d; ++k) offset += normal.dot(P.points[comb[k]]);
      offset /= d;
      double hi = -1e300, lo = 1e300;
      for (const Vector& p : P.points) {
        const double v = normal.dot(p) - offset;
        hi = std::max(hi, v);
        lo = std::min(lo, v);
      }
      int orient = 0;
      if (hi <= side_eps) orient = +1;
      else if (lo >= -side_eps) orient = -1;
      if (orient != 0) {
        HullFacet f;
        f.normal = orient * normal;
        f.offset = orient * offset;
        for (int i = 0; i < m; ++i) {
          if (std::fabs(f.normal.dot(P.points[i]) - f.offset) <= side_eps)
            f.incident.push_back(i);
        }
        found.emplace(f.incident, std::move(f));
      }
    }
    // next combination
    int pos = d - 1;
    while (pos >= 0 && comb[pos] == m - d + pos) --pos;
    if (pos < 0) break;
    ++comb[pos];
    for (int k = pos + 1; k < d; ++k) comb[k] = comb[k - 1] + 1;
  }

  std::vector<HullFacet> facets;
  facets.reserve(found.size());
  for (auto& [key, f] : found) facets.push_back(std::move(f));
  if (facets.empty())
    throw DegenerateError("hull_facets: no facets (degenerate input)");
  return facets;
}

std::vector<int> extreme_points(const VPolytope& P, const Tolerance& tol) {
  P.validate();
  const int d = P.dim;
  const int m = P.size();

  // Duplicates first: the smallest index stays as the representative.
  std::vector<bool> dup(m, false);
  for (int i = 0; i < m; ++i) {
    if (dup[i]) continue;
    const double r = tol.eps_rel * scale_of(P.points[i]);
    for (int j = i + 1; j < m; ++j) {
      if (!dup[j] &&
          (P.points[i] - P.points[j]).lpNorm<Eigen::Infinity>() <= r)
        dup[j] = true;
    }
  }
  std::vector<int> cand;
  for (int i = 0; i < m; ++i)
    if (!dup[i]) cand.push_back(i);

  std::vector<int> result;
  for (int ci = 0; ci < static_cast<int>(cand.size()); ++ci) {
    const int i = cand[ci];
    if (cand.size() == 1) {
      result.push_back(i);
      continue;
    }
    // Separation margin: max <c, p_i> - s over ||c||_inf <= 1 with
    // <c, p_j> <= s for the other points. Strictly positive exactly when
    // p_i sticks out of conv(others); the signed value is numerically far
    // steadier than a feasibility verdict.
    LPProblem lp(d + 1);
    lp.objective = Vector::Zero(d + 1);
    lp.objective.head(d) = P.points[i];
    lp.objective[d] = -1.0;
    for (int cj = 0; cj < static_cast<int>(cand.size()); ++cj) {
      if (cj == ci) continue;
      Vector row(d + 1);
      row.head(d) = P.points[cand[cj]];
      row[d] = -1.0;
      lp.add_row(row, RowSense::LE, 0.0);
    }
    for (int k = 0; k < d; ++k) {
      Vector e = Vector::Zero(d + 1);
      e[k] = 1.0;
      lp.add_row(e, RowSense::LE, 1.0);
      lp.add_row(-e, RowSense::LE, 1.0);
    }
    const LPSolution s = solve_lp(lp, tol);
    if (s.status == LPStatus::Optimal &&
        s.value > tol.eps_rel * scale_of(P.points[i]))
      result.push_back(i);
  }
  return result;
}

bool origin_interior_to_hull(const std::vector<Vector>& points, int dim,
                             const Tolerance& tol) {
  // 0 lies strictly inside conv(points) iff { x : <p_j, x> <= 1 } has a
  // trivial recession cone.
  std::vector<Vector> rows;
  for (const Vector& p : points) {
    const double n = p.norm();
    if (n > tol.eps_rel) rows.push_back(p / n);
  }
  if (static_cast<int>(rows.size()) < dim + 1) return false;
  for (int j = 0; j < dim; ++j) {
    for (int sign : {+1, -1}) {
      LPProblem lp(dim);
      lp.objective = Vector::Zero(dim);
      lp.objective[j] = sign;
      for (const Vector& r : rows) lp.add_row(r, RowSense::LE, 0.0);
      for (int k = 0; k < dim; ++k) {
        Vector e = Vector::Zero(dim);
        e[k] = 1.0;
        lp.add_row(e, RowSense::LE, 1.0);
        lp.add_row(-e, RowSense::LE, 1.0);
      }
      const LPSolution s = solve_lp(lp, tol);
      if (s.status != LPStatus::Optimal || s.value > 1e-7) return false;
    }
  }
  return true;
}

}  // namespace helly
