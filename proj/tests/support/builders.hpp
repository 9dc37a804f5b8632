// Deterministic instance builders shared by the unit and acceptance suites.
#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/types.hpp"

namespace builders {

using helly::Halfspace;
using helly::HPolytope;
using helly::Vector;
using helly::VPolytope;

inline HPolytope cube(int d, double r = 1.0) {
  std::vector<Halfspace> hs;
  for (int j = 0; j < d; ++j) {
    Vector e = Vector::Zero(d);
    e[j] = 1.0;
    hs.push_back({e, r});
    hs.push_back({-e, r});
  }
  return HPolytope(d, std::move(hs));
}

// x_i >= 0, sum x_i <= 1.
inline HPolytope standard_simplex(int d) {
  std::vector<Halfspace> hs;
  for (int j = 0; j < d; ++j) {
    Vector e = Vector::Zero(d);
    e[j] = -1.0;
    hs.push_back({e, 0.0});
  }
  hs.push_back({Vector::Ones(d), 1.0});
  return HPolytope(d, std::move(hs));
}

// Vertices of a regular simplex in R^d, centered at the origin,
// unit circumradius: orthogonal projection of the e_i basis of R^{d+1}.
inline std::vector<Vector> regular_simplex_vertices(int d) {
  const int m = d + 1;
  // Gram-Schmidt a basis of the hyperplane sum(x)=0 in R^m.
  helly::Matrix basis(m, d);
  for (int k = 0; k < d; ++k) {
    Vector v = Vector::Zero(m);
    v[k] = 1.0;
    v[k + 1] = -1.0;
    for (int j = 0; j < k; ++j) v -= basis.col(j).dot(v) * basis.col(j);
    basis.col(k) = v.normalized();
  }
  std::vector<Vector> out;
  for (int i = 0; i < m; ++i) {
    Vector e = Vector::Zero(m);
    e[i] = 1.0;
    Vector c = Vector::Constant(m, 1.0 / m);
    Vector w = basis.transpose() * (e - c);
    out.push_back(w / w.norm());
  }
  return out;
}

// H-representation of the centered regular simplex: facet opposite vertex
// w_i is { x : <-w_i, x> <= 1/d } (unit-circumradius normalization).
inline HPolytope regular_simplex_hrep(int d) {
  std::vector<Halfspace> hs;
  for (const Vector& w : regular_simplex_vertices(d))
    hs.push_back({-w, 1.0 / d});
  return HPolytope(d, std::move(hs));
}

// Random bounded full-dimensional instance: unit normals, offsets in
// [0.5, 2], resampled until the recession cone is trivial. Contains the
// 0.5-ball around the origin by construction.
inline HPolytope random_instance(int d, int n, std::mt19937_64& rng,
                                 const helly::Tolerance& tol = {}) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.5, 2.0);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Halfspace> hs;
    for (int i = 0; i < n; ++i) {
      Vector u(d);
      for (int j = 0; j < d; ++j) u[j] = gauss(rng);
      const double nn = u.norm();
      if (nn < 1e-9) { --i; continue; }
      hs.push_back({u / nn, uni(rng)});
    }
    HPolytope k(d, std::move(hs));
    if (helly::check_bounded_full_dim(k, tol).bounded) return k;
  }
  throw helly::NumericalError("random_instance: could not draw a bounded body");
}

inline std::vector<Vector> random_points(int d, int n, double radius,
                                         std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i) {
    Vector x(d);
    for (int j = 0; j < d; ++j) x[j] = gauss(rng);
    x *= radius * std::pow(uni(rng), 1.0 / d) / x.norm();
    pts.push_back(x);
  }
  return pts;
}

inline Vector random_direction(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector x(d);
  do {
    for (int j = 0; j < d; ++j) x[j] = gauss(rng);
  } while (x.norm() < 1e-9);
  return x / x.norm();
}

}  // namespace builders
