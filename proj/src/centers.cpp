#include <cmath>

#include "helly/centers.hpp"

namespace helly {

std::string to_string(CenterMethod m) {
  return m == CenterMethod::Centroid ? "centroid" : "loewner";
}

Vector center_centroid(const HPolytope& K, const Tolerance& tol) {
  const VPolytope verts = enumerate_vertices(K, tol);
  return measure_hpolytope(K, verts, tol).centroid;
}

Ellipsoid min_enclosing_ellipsoid(const std::vector<Vector>& points, int dim,
                                  double rel_gap, int max_iters) {
  const int m = static_cast<int>(points.size());
  if (m < dim + 1)
    throw DegenerateError("min_enclosing_ellipsoid: too few points");
  const int dl = dim + 1;

  // Lifted formulation: weights u over points, M(u) = sum u_i q_i q_i'
  // with q_i = (p_i, 1). Khachiyan ascent with Todd-Yildirim away steps,
  // which also drop weights hitting zero.
  Matrix q(dl, m);
  for (int i = 0; i < m; ++i) {
    q.col(i).head(dim) = points[i];
    q(dim, i) = 1.0;
  }
  Vector u = Vector::Constant(m, 1.0 / m);

  Matrix minv(dl, dl);
  Vector kappa(m);
  for (int iter = 0; iter < max_iters; ++iter) {
    Matrix mu = Matrix::Zero(dl, dl);
    for (int i = 0; i < m; ++i) {
      if (u[i] > 0.0) mu += u[i] * (q.col(i) * q.col(i).transpose());
    }
    minv = mu.ldlt().solve(Matrix::Identity(dl, dl));
    for (int i = 0; i < m; ++i) kappa[i] = q.col(i).dot(minv * q.col(i));

    int ip = 0, im = -1;
    for (int i = 1; i < m; ++i)
      if (kappa[i] > kappa[ip]) ip = i;
    for (int i = 0; i < m; ++i) {
      if (u[i] <= 0.0) continue;
      if (im < 0 || kappa[i] < kappa[im]) im = i;
    }
    const double eps_plus = kappa[ip] / dl - 1.0;
    const double eps_minus = 1.0 - kappa[im] / dl;
    if (std::max(eps_plus, eps_minus) <= rel_gap) {
      Ellipsoid e;
      e.center = Vector::Zero(dim);
      for (int i = 0; i < m; ++i) e.center += u[i] * points[i];
      Matrix sec = Matrix::Zero(dim, dim);
      for (int i = 0; i < m; ++i)
        if (u[i] > 0.0)
          sec += u[i] * (points[i] * points[i].transpose());
      sec -= e.center * e.center.transpose();
      e.shape = sec.ldlt().solve(Matrix::Identity(dim, dim)) / dim;
      return e;
    }
    if (eps_plus >= eps_minus) {
      const double beta = (kappa[ip] - dl) / (dl * (kappa[ip] - 1.0));
      u *= (1.0 - beta);
      u[ip] += beta;
    } else {
      double beta = u[im] / (1.0 - u[im]);
      if (kappa[im] > 1.0)
        beta = std::min(beta, (dl - kappa[im]) / (dl * (kappa[im] - 1.0)));
      u *= (1.0 + beta);
      u[im] -= beta;
      if (u[im] < 0.0) u[im] = 0.0;
    }
  }
  throw NumericalError("min_enclosing_ellipsoid: no convergence within cap");
}

Vector center_loewner(const HPolytope& K, const Tolerance& tol) {
  const VPolytope verts = enumerate_vertices(K, tol);
  const Ellipsoid e = min_enclosing_ellipsoid(verts.points, K.dim);
  // The returned center must sit strictly inside K.
  for (const Halfspace& h : K.halfspaces) {
    const double slack =
        (h.offset - h.normal.dot(e.center)) / h.normal.norm();
    if (!(slack > 0.0))
      throw NumericalError("center_loewner: center not strictly interior");
  }
  return e.center;
}

double asymmetry_lambda(const VPolytope& Q, const Tolerance& tol) {
  Q.validate();
  if (!origin_interior_to_hull(Q.points, Q.dim, tol))
    throw NotInteriorError("asymmetry_lambda: origin not interior to conv(Q)");
  // max over points of gauge(Q, -p); convexity makes the max over all
  // points equal the max over extreme points.
  double lam = 0.0;
  for (const Vector& p : Q.points) {
    const auto g = hull_gauge(Q.points, -p, tol);
    if (!g)
      throw NumericalError("asymmetry_lambda: absorption LP infeasible");
    lam = std::max(lam, *g);
  }
  return lam;
}

CenterReport make_center_report(const HPolytope& K, CenterMethod method,
                                const Tolerance& tol) {
  CenterReport rep;
  rep.method = method;
  rep.z = (method == CenterMethod::Centroid) ? center_centroid(K, tol)
                                             : center_loewner(K, tol);
  std::vector<Vector> polar;
  polar.reserve(K.halfspaces.size());
  for (const Halfspace& h : K.halfspaces) {
    const double slack = h.offset - h.normal.dot(rep.z);
    if (!(slack > 0.0))
      throw NotInteriorError("make_center_report: center not interior");
    polar.push_back(h.normal / slack);
  }
  rep.lambda = asymmetry_lambda(VPolytope(K.dim, std::move(polar)), tol);
  return rep;
}

}  // namespace helly
