#include <algorithm>
#include <cmath>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {
namespace {

struct NormalizedRows {
  Matrix a;        // n x d, unit 2-norm rows
  Vector b;
};

NormalizedRows normalize_rows(const HPolytope& K) {
  const int n = K.size();
  const int d = K.dim;
  NormalizedRows r;
  r.a.resize(n, d);
  r.b.resize(n);
  for (int i = 0; i < n; ++i) {
    const double s = K.halfspaces[i].normal.norm();
    r.a.row(i) = K.halfspaces[i].normal.transpose() / s;
    r.b[i] = K.halfspaces[i].offset / s;
  }
  return r;
}

}  // namespace

BoundednessReport check_bounded_full_dim(const HPolytope& K,
                                         const Tolerance& tol) {
  K.validate();
  const int d = K.dim;
  const int n = K.size();
  const NormalizedRows nr = normalize_rows(K);

  BoundednessReport rep;

  // Boundedness: the recession cone {r : <u_i, r> <= 0} is {0} iff the
  // boxed LPs max +-e_j . r all optimize to zero.
  rep.bounded = true;
  for (int j = 0; j < d && rep.bounded; ++j) {
    for (int sign : {+1, -1}) {
      LPProblem lp(d);
      lp.objective = Vector::Zero(d);
      lp.objective[j] = sign;
      for (int i = 0; i < n; ++i)
        lp.add_row(nr.a.row(i).transpose(), RowSense::LE, 0.0);
      for (int k = 0; k < d; ++k) {
        Vector e = Vector::Zero(d);
        e[k] = 1.0;
        lp.add_row(e, RowSense::LE, 1.0);
        lp.add_row(-e, RowSense::LE, 1.0);
      }
      const LPSolution s = solve_lp(lp, tol);
      if (s.status != LPStatus::Optimal || s.value > 1e-7) {
        rep.bounded = false;
        break;
      }
    }
  }

  // Full dimension: Chebyshev inradius, capped at 1 so the LP stays
  // bounded even for unbounded input.
  {
    LPProblem lp(d + 1);
    lp.objective = Vector::Zero(d + 1);
    lp.objective[d] = 1.0;
    for (int i = 0; i < n; ++i) {
      Vector row(d + 1);
      row.head(d) = nr.a.row(i).transpose();
      row[d] = 1.0;
      lp.add_row(row, RowSense::LE, nr.b[i]);
    }
    Vector cap = Vector::Zero(d + 1);
    cap[d] = 1.0;
    lp.add_row(cap, RowSense::LE, 1.0);
    const LPSolution s = solve_lp(lp, tol);
    if (s.status == LPStatus::Optimal) {
      rep.inradius = s.value;
      rep.chebyshev_center = s.point.head(d);
      const double scale = scale_of(rep.chebyshev_center);
      rep.full_dim = s.value > 10.0 * tol.eps_rel * scale;
    } else {
      rep.full_dim = false;   // infeasible: empty body
      rep.inradius = 0.0;
    }
  }
  return rep;
}

VPolytope enumerate_vertices(const HPolytope& K, const Tolerance& tol) {
  const BoundednessReport rep = check_bounded_full_dim(K, tol);
  if (!rep.bounded)
    throw UnboundedError("enumerate_vertices: polytope is unbounded");
  if (!rep.full_dim)
    throw DegenerateError("enumerate_vertices: polytope is not full-dimensional");

  const int d = K.dim;
  const int n = K.size();
  if (n < d)
    throw DegenerateError("enumerate_vertices: fewer halfspaces than dimension");
  const NormalizedRows nr = normalize_rows(K);

  // DFS over index-increasing d-subsets with incremental Gaussian
  // elimination: depth k holds k reduced rows, each with a recorded pivot
  // column; a new row is eliminated in O(d^2) and rank-deficient branches
  // are skipped without expanding them.
  std::vector<Vector> candidates;
  Matrix red(d, d);
  Vector red_rhs(d);
  std::vector<int> pivcol(d);
  Vector work(d), x(d);

  constexpr double kRankEps = 1e-9;

  auto feasible = [&](const Vector& pt) {
    const double slack = 10.0 * tol.eps_rel * (1.0 + pt.norm());
    for (int t = 0; t < n; ++t) {
      if (nr.a.row(t).dot(pt) > nr.b[t] + slack) return false;
    }
    return true;
  };

  // Iterative DFS.
  struct Frame { int next; };
  std::vector<Frame> stack(d + 1);
  int depth = 0;
  stack[0].next = 0;
  while (depth >= 0) {
    int& j = stack[depth].next;
    if (depth == d) {
      // Back-substitution over the recorded pivot columns.
      for (int i = d - 1; i >= 0; --i) {
        double v = red_rhs[i];
        for (int l = i + 1; l < d; ++l) v -= red(i, pivcol[l]) * x[pivcol[l]];
        x[pivcol[i]] = v;
      }
      if (x.allFinite() && feasible(x)) candidates.push_back(x);
      --depth;
      continue;
    }
    if (j > n - (d - depth)) {   // not enough rows left
      --depth;
      continue;
    }
    work = nr.a.row(j).transpose();
    double rhs = nr.b[j];
    for (int i = 0; i < depth; ++i) {
      const double f = work[pivcol[i]];
      if (f != 0.0) {
        work -= f * red.row(i).transpose();
        rhs -= f * red_rhs[i];
      }
    }
    int piv = -1;
    double best = kRankEps;
    for (int c = 0; c < d; ++c) {
      bool used = false;
      for (int i = 0; i < depth; ++i)
        if (pivcol[i] == c) { used = true; break; }
      if (used) continue;
      if (std::fabs(work[c]) > best) {
        best = std::fabs(work[c]);
        piv = c;
      }
    }
    ++j;
    if (piv < 0) continue;   // dependent row at this position
    red.row(depth) = (work / work[piv]).transpose();
    red_rhs[depth] = rhs / work[piv];
    pivcol[depth] = piv;
    ++depth;
    stack[depth].next = j;
  }

  // Lexicographic sort, then scale-aware clustering.
  std::sort(candidates.begin(), candidates.end(),
            [](const Vector& a, const Vector& b) {
              for (int i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  std::vector<Vector> verts;
  for (const Vector& c : candidates) {
    const double radius = tol.eps_rel * scale_of(c);
    bool dup = false;
    for (auto it = verts.rbegin(); it != verts.rend(); ++it) {
      if (c[0] - (*it)[0] > radius) break;
      if ((c - *it).lpNorm<Eigen::Infinity>() <= radius) {
        dup = true;
        break;
      }
    }
    if (!dup) verts.push_back(c);
  }
  if (verts.empty())
    throw DegenerateError("enumerate_vertices: no vertices found");
  return VPolytope(d, std::move(verts));
}

}  // namespace helly
