#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "helly/grunbaum.hpp"

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

double simplex_det(const std::vector<Vector>& pts,
                   const std::vector<int>& idx, Matrix& scratch) {
  const int d = static_cast<int>(idx.size()) - 1;
  for (int k = 0; k < d; ++k)
    scratch.col(k) = pts[idx[k + 1]] - pts[idx[0]];
  return std::fabs(scratch.determinant());
}

// Barycentric evaluator for a fixed nondegenerate simplex.
class Barycentric {
 public:
  Barycentric(const std::vector<Vector>& verts) : base_(verts[0]) {
    const int d = static_cast<int>(verts.size()) - 1;
    Matrix e(d, d);
    for (int k = 0; k < d; ++k) e.col(k) = verts[k + 1] - base_;
    lu_.compute(e);
    degenerate_ = std::fabs(e.determinant()) < 1e-300;
  }

  bool degenerate() const { return degenerate_; }

  // Coordinates (beta_0, ..., beta_d); they sum to 1.
  Vector coords(const Vector& x) const {
    const Vector lam = lu_.solve(x - base_);
    Vector b(lam.size() + 1);
    b[0] = 1.0 - lam.sum();
    b.tail(lam.size()) = lam;
    return b;
  }

 private:
  Vector base_;
  Eigen::PartialPivLU<Matrix> lu_;
  bool degenerate_ = false;
};

// Worst (most negative) barycentric coordinate of the dilation witness
// over all points of Q: checks  Q subset of -a * S + shift  where the
// preimage of q is (shift - q) / a.
double containment_worst(const VPolytope& Q, const Barycentric& bary,
                         double a, const Vector& shift) {
  double worst = 1.0;
  for (const Vector& q : Q.points) {
    const Vector x = (shift - q) / a;
    worst = std::min(worst, bary.coords(x).minCoeff());
  }
  return worst;
}

std::vector<Vector> gather(const std::vector<Vector>& pts,
                           const std::vector<int>& idx) {
  std::vector<Vector> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(pts[i]);
  return out;
}

Vector mean_of(const std::vector<Vector>& pts) {
  Vector m = Vector::Zero(pts[0].size());
  for (const Vector& p : pts) m += p;
  return m / static_cast<double>(pts.size());
}

// Minimal c with Q subset of -c * conv(chosen), per-point gauge maximum.
double measured_factor(const VPolytope& Q, const std::vector<Vector>& chosen,
                       const Tolerance& tol) {
  double c = 0.0;
  for (const Vector& q : Q.points) {
    const auto g = hull_gauge(chosen, -q, tol);
    if (!g)
      throw CertificateError(
          "selection: a point of Q is absorbed by no dilate of the "
          "chosen hull");
    c = std::max(c, *g);
  }
  return c;
}

void require(std::vector<CertificateEntry>& certs, const std::string& name,
             double value, double limit) {
  certs.push_back({name, value <= limit, value, limit});
  if (!(value <= limit))
    throw CertificateError("selection certificate failed: " + name);
}

}  // namespace

std::string to_string(SelectionVariant v) {
  return v == SelectionVariant::A2dPlus1 ? "2d+1" : "2d";
}

namespace {

std::vector<int> exhaustive_max_simplex(const std::vector<Vector>& pts, int d,
                                        Matrix& scratch) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> comb(d + 1), best_idx;
  for (int i = 0; i <= d; ++i) comb[i] = i;
  double best_v = -1.0;
  while (true) {
    const double v = simplex_det(pts, comb, scratch);
    if (v > best_v) {
      best_v = v;
      best_idx = comb;
    }
    int pos = d;
    while (pos >= 0 && comb[pos] == n - (d + 1) + pos) --pos;
    if (pos < 0) break;
    ++comb[pos];
    for (int k = pos + 1; k <= d; ++k) comb[k] = comb[k - 1] + 1;
  }
  return best_idx;
}

}  // namespace

SimplexCertificate max_volume_simplex(const VPolytope& Q,
                                      const Tolerance& tol) {
  Q.validate();
  const int d = Q.dim;
  const int n = Q.size();
  if (n < d + 1)
    throw DegenerateError("max_volume_simplex: fewer than d+1 points");

  double coord_scale = 1.0;
  for (const Vector& p : Q.points)
    coord_scale = std::max(coord_scale, p.lpNorm<Eigen::Infinity>());

  // Small point sets are searched exhaustively: the global maximum is in
  // particular swap-locally-maximal, and small polar instances are audited
  // against exactly this enumeration. The heuristic below covers the rest.
  if (binomial_capped(n, d + 1, 2000.0) <= 2000.0) {
    Matrix scratch(d, d);
    std::vector<int> idx = exhaustive_max_simplex(Q.points, d, scratch);
    std::sort(idx.begin(), idx.end());
    SimplexCertificate cert;
    cert.vertices = idx;
    cert.v = mean_of(gather(Q.points, idx));
    cert.exhaustive_used = true;
    std::vector<Vector> refl;
    for (int i : idx) refl.push_back((d + 1.0) * cert.v - d * Q.points[i]);
    Barycentric bary(refl);
    if (bary.degenerate())
      throw DegenerateError("max_volume_simplex: points do not span R^d");
    double worst = 1.0;
    for (const Vector& q : Q.points)
      worst = std::min(worst, bary.coords(q).minCoeff());
    cert.worst_barycentric = worst;
    cert.containment_ok = worst >= -tol.containment_slack;
    if (!cert.containment_ok)
      throw CertificateError(
          "max_volume_simplex: containment failed for the exhaustive "
          "maximum (numerical breakdown)");
    return cert;
  }

  // Greedy start: farthest pair, then repeatedly the point adding the most
  // affine volume (largest residual against the current span).
  std::vector<int> cur;
  {
    int bi = 0, bj = 1;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double dd = (Q.points[i] - Q.points[j]).squaredNorm();
        if (dd > best) {
          best = dd;
          bi = i;
          bj = j;
        }
      }
    }
    cur = {bi, bj};
    Matrix basis(d, d);
    basis.col(0) = (Q.points[bj] - Q.points[bi]).normalized();
    int nb = 1;
    while (static_cast<int>(cur.size()) < d + 1) {
      int pick = -1;
      double best_res = 10.0 * tol.eps_rel * coord_scale;
      Vector best_dir;
      for (int i = 0; i < n; ++i) {
        if (std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
        Vector r = Q.points[i] - Q.points[cur[0]];
        r -= basis.leftCols(nb) * (basis.leftCols(nb).transpose() * r);
        const double res = r.norm();
        if (res > best_res) {
          best_res = res;
          pick = i;
          best_dir = r / res;
        }
      }
      if (pick < 0)
        throw DegenerateError("max_volume_simplex: points do not span R^d");
      cur.push_back(pick);
      basis.col(nb++) = best_dir;
    }
  }

  // Single-vertex swaps until no replacement improves the volume.
  Matrix scratch(d, d);
  double vol = simplex_det(Q.points, cur, scratch);
  const int sweep_cap = 200 * (n + d);
  for (int sweep = 0; sweep < sweep_cap; ++sweep) {
    int best_slot = -1, best_cand = -1;
    double best_vol = vol * (1.0 + 1e-12);
    std::vector<int> trial = cur;
    for (int slot = 0; slot <= d; ++slot) {
      const int keep = cur[slot];
      for (int cand = 0; cand < n; ++cand) {
        if (std::find(cur.begin(), cur.end(), cand) != cur.end()) continue;
        trial[slot] = cand;
        const double v = simplex_det(Q.points, trial, scratch);
        if (v > best_vol) {
          best_vol = v;
          best_slot = slot;
          best_cand = cand;
        }
      }
      trial[slot] = keep;
    }
    if (best_slot < 0) break;
    cur[best_slot] = best_cand;
    vol = best_vol;
  }

  auto finish = [&](std::vector<int> idx, bool exhaustive) {
    std::sort(idx.begin(), idx.end());
    SimplexCertificate cert;
    cert.vertices = idx;
    cert.v = mean_of(gather(Q.points, idx));
    cert.exhaustive_used = exhaustive;
    // Reflected dilate -d(S - v) + v has vertices (d+1)v - d s_i; check
    // every point of Q against it.
    std::vector<Vector> refl;
    for (int i : idx) refl.push_back((d + 1.0) * cert.v - d * Q.points[i]);
    Barycentric bary(refl);
    if (bary.degenerate()) {
      cert.containment_ok = false;
      cert.worst_barycentric = -1.0;
      return cert;
    }
    double worst = 1.0;
    for (const Vector& q : Q.points)
      worst = std::min(worst, bary.coords(q).minCoeff());
    cert.worst_barycentric = worst;
    cert.containment_ok = worst >= -tol.containment_slack;
    return cert;
  };

  SimplexCertificate cert = finish(cur, false);
  if (!cert.containment_ok) {
    if (binomial_capped(n, d + 1, 1e6) > 1e6)
      throw NumericalError(
          "max_volume_simplex: containment unverified and exhaustive "
          "fallback exceeds the subset cap");
    cert = finish(exhaustive_max_simplex(Q.points, d, scratch), true);
    if (!cert.containment_ok)
      throw CertificateError(
          "max_volume_simplex: containment failed for the exhaustive "
          "maximum (numerical breakdown)");
  }
  return cert;
}

CaratheodoryPoint caratheodory_boundary(const VPolytope& Q, const Vector& dir,
                                        const Tolerance& tol) {
  Q.validate();
  if (dir.lpNorm<Eigen::Infinity>() == 0.0)
    throw PreconditionError("caratheodory_boundary: zero direction");
  const int d = Q.dim;

  const auto sol = hull_gauge_solution(Q.points, dir, tol);
  if (!sol || !(sol->value > 0.0)) {
    if (!origin_interior_to_hull(Q.points, Q.dim, tol))
      throw NotInteriorError(
          "caratheodory_boundary: origin not interior to conv(Q)");
    throw NumericalError("caratheodory_boundary: gauge LP failed");
  }
  const double g = sol->value;
  const Vector y = dir / g;

  std::vector<int> support;
  std::vector<double> alpha;
  for (int j = 0; j < Q.size(); ++j) {
    const double a = sol->weights[j] / g;
    if (a > 1e-9) {
      support.push_back(j);
      alpha.push_back(a);
    }
  }

  // A basic optimum already has at most d positive weights; the reduction
  // below only fires on degenerate ties. All positive-weight points lie on
  // one support hyperplane, so the affine kernel stays nontrivial until
  // the support is at most d.
  int guard = Q.size() + 2;
  while (static_cast<int>(support.size()) > d && guard-- > 0) {
    const int s = static_cast<int>(support.size());
    Matrix m(d + 1, s);
    for (int c = 0; c < s; ++c) {
      m.col(c).head(d) = Q.points[support[c]];
      m(d, c) = 1.0;
    }
    Eigen::FullPivLU<Matrix> lu(m);
    lu.setThreshold(1e-10);
    if (lu.dimensionOfKernel() < 1) break;
    Vector eta = lu.kernel().col(0);
    if (eta.maxCoeff() <= 0.0) eta = -eta;
    double theta = 1e300;
    int drop = -1;
    for (int c = 0; c < s; ++c) {
      if (eta[c] > 1e-14) {
        const double t = alpha[c] / eta[c];
        if (t < theta) {
          theta = t;
          drop = c;
        }
      }
    }
    if (drop < 0) break;
    for (int c = 0; c < s; ++c) alpha[c] -= theta * eta[c];
    alpha[drop] = 0.0;
    std::vector<int> ns;
    std::vector<double> na;
    for (int c = 0; c < s; ++c) {
      if (alpha[c] > 1e-12) {
        ns.push_back(support[c]);
        na.push_back(alpha[c]);
      }
    }
    support.swap(ns);
    alpha.swap(na);
  }
  if (static_cast<int>(support.size()) > d)
    throw NumericalError(
        "caratheodory_boundary: could not reduce the support to d points");

  // Recombination sanity: the kept points must still produce y.
  Vector recon = Vector::Zero(d);
  double wsum = 0.0;
  for (std::size_t c = 0; c < support.size(); ++c) {
    recon += alpha[c] * Q.points[support[c]];
    wsum += alpha[c];
  }
  if (std::fabs(wsum - 1.0) > 1e-7 ||
      (recon - y).lpNorm<Eigen::Infinity>() > 1e-7 * scale_of(y))
    throw NumericalError("caratheodory_boundary: recombination check failed");

  std::vector<int> order(support.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return support[a] < support[b]; });
  CaratheodoryPoint out;
  out.y = y;
  for (int i : order) {
    out.indices.push_back(support[i]);
    out.weights.push_back(alpha[i]);
  }
  return out;
}

namespace {

GrunbaumSelection select_common(const VPolytope& Q, double lambda,
                                SelectionVariant variant,
                                const Tolerance& tol) {
  Q.validate();
  const int d = Q.dim;
  const double dd = d;

  GrunbaumSelection sel;
  sel.variant = variant;
  sel.lambda = lambda;
  sel.simplex = max_volume_simplex(Q, tol);
  sel.v = sel.simplex.v;
  const double diam = diameter(Q);

  std::vector<CertificateEntry>& certs = sel.certificates;
  certs.push_back({"reflected_simplex_absorbs_body",
                   sel.simplex.containment_ok,
                   -sel.simplex.worst_barycentric, tol.containment_slack});
  if (!sel.simplex.containment_ok)
    throw CertificateError(
        "selection: reflected-simplex containment failed");

  const int max_size = (variant == SelectionVariant::A2dPlus1) ? 2 * d + 1
                                                               : 2 * d;

  if (sel.v.norm() <= tol.eps_rel * diam) {
    // Centered simplex: its vertex set alone absorbs Q with factor d.
    sel.degenerate_center = true;
    sel.chosen = sel.simplex.vertices;
    sel.factor = dd;
  } else if (variant == SelectionVariant::A2dPlus1) {
    const CaratheodoryPoint car = caratheodory_boundary(Q, -sel.v, tol);
    sel.boundary_point = car.y;
    std::set<int> u(sel.simplex.vertices.begin(), sel.simplex.vertices.end());
    u.insert(car.indices.begin(), car.indices.end());
    sel.chosen.assign(u.begin(), u.end());
    sel.factor = (lambda + 1.0) * (dd + 1.0);

    const auto g2 = hull_gauge(gather(Q.points, sel.chosen), -sel.v, tol);
    require(certs, "centroid_in_reflected_selection_hull",
            g2 ? *g2 : 1e300, lambda * (1.0 + tol.containment_slack));
  } else {
    // Walk from v along v to the boundary of S; the exit facet F is the
    // one whose barycentric coordinate vanishes first (smallest index on
    // ties). S1 = conv{v, F}, w = centroid(S1).
    std::vector<Vector> sv = gather(Q.points, sel.simplex.vertices);
    Barycentric bary_s(sv);
    if (bary_s.degenerate())
      throw DegenerateError("select_2d: degenerate maximal simplex");
    const Vector beta_v = bary_s.coords(sel.v);
    const Vector beta_dir =
        bary_s.coords(sel.v + sel.v) - beta_v;   // linear part along v
    int exit_facet = -1;
    double t_exit = 1e300;
    for (int i = 0; i <= d; ++i) {
      if (beta_dir[i] < -1e-13) {
        const double t = beta_v[i] / (-beta_dir[i]);
        if (t < t_exit - 1e-12) {
          t_exit = t;
          exit_facet = i;
        }
      }
    }
    if (exit_facet < 0)
      throw NumericalError("select_2d: ray from v along v never exits S");
    sel.ray_exit = (1.0 + t_exit) * sel.v;

    std::vector<int> f_idx;
    std::vector<Vector> s1{sel.v};
    for (int i = 0; i <= d; ++i) {
      if (i == exit_facet) continue;
      f_idx.push_back(sel.simplex.vertices[i]);
      s1.push_back(Q.points[sel.simplex.vertices[i]]);
    }
    sel.w = mean_of(s1);

    if (sel.w.norm() <= tol.eps_rel * diam) {
      sel.degenerate_center = true;
      sel.chosen = sel.simplex.vertices;
      sel.factor = dd;
    } else {
      const CaratheodoryPoint car = caratheodory_boundary(Q, -sel.w, tol);
      sel.boundary_point = car.y;
      std::set<int> u(f_idx.begin(), f_idx.end());
      u.insert(car.indices.begin(), car.indices.end());
      sel.chosen.assign(u.begin(), u.end());
      const double big = 2.0 * dd * dd + 2.0 * dd + 1.0;
      sel.factor = (lambda + 1.0) * big;

      // Q inside -2d(d+1) S1 + (2d^2+2d+1) w, point by point.
      Barycentric bary_s1(s1);
      if (bary_s1.degenerate())
        throw DegenerateError("select_2d: degenerate S1");
      const double worst =
          containment_worst(Q, bary_s1, 2.0 * dd * (dd + 1.0), big * sel.w);
      require(certs, "cone_simplex_dilate_absorbs_body", -worst,
              tol.containment_slack);

      // S1 inside the chosen hull, tested at its vertices.
      const std::vector<Vector> qpp = gather(Q.points, sel.chosen);
      double worst4 = 0.0;
      for (const Vector& s : s1) {
        const auto g = hull_gauge(qpp, s, tol);
        worst4 = std::max(worst4, g ? *g : 1e300);
      }
      require(certs, "cone_simplex_inside_selection_hull", worst4,
              1.0 + tol.containment_slack);

      // w in -lambda * (chosen hull).
      const auto g5 = hull_gauge(qpp, -sel.w, tol);
      require(certs, "cone_centroid_in_reflected_selection_hull",
              g5 ? *g5 : 1e300,
              lambda * (1.0 + tol.containment_slack));
    }
  }

  certs.push_back({"selection_size", static_cast<int>(sel.chosen.size()) <=
                                         max_size,
                   static_cast<double>(sel.chosen.size()),
                   static_cast<double>(max_size)});
  if (static_cast<int>(sel.chosen.size()) > max_size)
    throw CertificateError("selection: size bound violated");

  sel.measured = measured_factor(Q, gather(Q.points, sel.chosen), tol);
  require(certs, "measured_factor_within_certified", sel.measured,
          sel.factor * (1.0 + tol.containment_slack));
  return sel;
}

}  // namespace

GrunbaumSelection select_2d_plus_1(const VPolytope& Q, double lambda,
                                   const Tolerance& tol) {
  return select_common(Q, lambda, SelectionVariant::A2dPlus1, tol);
}

GrunbaumSelection select_2d(const VPolytope& Q, double lambda,
                            const Tolerance& tol) {
  return select_common(Q, lambda, SelectionVariant::B2d, tol);
}

}  // namespace helly
