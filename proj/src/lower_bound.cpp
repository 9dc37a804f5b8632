#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "helly/lower_bound.hpp"

namespace helly {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double binomial_capped(int n, int k, double cap) {
  double v = 1.0;
  for (int i = 0; i < k; ++i) {
    v *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (v > cap) return cap + 1.0;
  }
  return v;
}

Matrix seeded_rotation(int d, std::uint64_t seed) {
  if (seed == 0) return Matrix::Identity(d, d);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  if (q.determinant() < 0.0) q.col(0) = -q.col(0);
  return q;
}

// Root of x^(m+1) = x + 1; generalizes the plastic constant and drives the
// Kronecker (R_m) additive recurrence.
double harmonious_root(int m) {
  double x = 1.5;
  for (int it = 0; it < 64; ++it) {
    const double f = std::pow(x, m + 1) - x - 1.0;
    const double fp = (m + 1) * std::pow(x, m) - 1.0;
    x -= f / fp;
  }
  return x;
}

StripFamily kronecker_sphere(int d, int n, std::uint64_t seed) {
  const int m = (d % 2 == 0) ? d : d + 1;   // Box-Muller consumes pairs
  const double g = harmonious_root(m);
  std::vector<double> alpha(m), u0(m, 0.5);
  for (int j = 0; j < m; ++j) {
    double a = 1.0 / std::pow(g, j + 1);
    alpha[j] = a - std::floor(a);
  }
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int j = 0; j < m; ++j) u0[j] = uni(rng);
  }
  StripFamily fam;
  fam.dim = d;
  fam.vectors.reserve(n);
  std::vector<double> u(m);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < m; ++j) {
      double v = u0[j] + (k + 1) * alpha[j];
      u[j] = v - std::floor(v);
    }
    Vector x(d);
    for (int j = 0; j + 1 < m; j += 2) {
      const double r = std::sqrt(-2.0 * std::log(std::max(u[j], 1e-16)));
      const double a = kTwoPi * u[j + 1];
      if (j < d) x[j] = r * std::cos(a);
      if (j + 1 < d) x[j + 1] = r * std::sin(a);
    }
    if (x.norm() < 1e-12) x[0] = 1.0;   // essentially impossible
    fam.vectors.push_back(x.normalized());
  }
  return fam;
}

}  // namespace

StripFamily sphere_family(int d, int n, std::uint64_t seed) {
  if (d < 2) throw PreconditionError("sphere_family: d must be >= 2");
  if (n < d + 1) throw PreconditionError("sphere_family: n must be >= d+1");
  StripFamily fam;
  fam.dim = d;
  if (d == 2) {
    double offset = 0.0;
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> uni(0.0, kTwoPi / n);
      offset = uni(rng);
    }
    for (int k = 0; k < n; ++k) {
      const double a = offset + kTwoPi * k / n;
      Vector v(2);
      v << std::cos(a), std::sin(a);
      fam.vectors.push_back(v);
    }
  } else if (d == 3) {
    const double golden_angle =
        kTwoPi * (1.0 - 1.0 / ((1.0 + std::sqrt(5.0)) / 2.0));
    const Matrix rot = seeded_rotation(3, seed);
    for (int k = 0; k < n; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / n;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden_angle * k;
      Vector v(3);
      v << r * std::cos(a), r * std::sin(a), z;
      fam.vectors.push_back((rot * v).normalized());
    }
  } else {
    fam = kronecker_sphere(d, n, seed);
  }
  return fam;
}

StripFamily axis_aligned_family(int d) {
  StripFamily fam;
  fam.dim = d;
  for (int j = 0; j < d; ++j) {
    Vector e = Vector::Zero(d);
    e[j] = 1.0;
    fam.vectors.push_back(e);
    fam.vectors.push_back(-e);
  }
  return fam;
}

double covering_radius(const StripFamily& family) {
  const int d = family.dim;
  const int n = family.size();
  if (d == 2) {
    std::vector<double> ang;
    ang.reserve(n);
    for (const Vector& v : family.vectors) ang.push_back(std::atan2(v[1], v[0]));
    std::sort(ang.begin(), ang.end());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double next = (i + 1 < n) ? ang[i + 1] : ang[0] + kTwoPi;
      worst = std::max(worst, next - ang[i]);
    }
    return 2.0 * std::sin(worst / 4.0);   // chord to the gap midpoint
  }
  // Sampled: probe with a denser deterministic family plus the negated
  // family (deep holes often sit opposite a sample cluster).
  const int m = std::max(20000, 40 * n);
  StripFamily probe = sphere_family(d, m, 0x5eedULL);
  for (int i = 0; i < n; ++i) probe.vectors.push_back(-family.vectors[i]);
  double worst = 0.0;
  for (const Vector& s : probe.vectors) {
    double best = 1e300;
    for (const Vector& u : family.vectors)
      best = std::min(best, (s - u).squaredNorm());
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

LowerBoundWitness witness(const StripFamily& family,
                          const std::vector<int>& sigma,
                          const Tolerance& tol) {
  const int d = family.dim;
  if (sigma.empty()) throw PreconditionError("witness: empty sigma");
  for (int i : sigma) {
    if (i < 0 || i >= family.size())
      throw PreconditionError("witness: sigma index out of range");
    if (std::fabs(family.vectors[i].norm() - 1.0) > 1e-9)
      throw PreconditionError("witness: family vector is not unit length");
  }

  LowerBoundWitness w;
  w.sigma = sigma;
  w.a = Matrix::Zero(d, d);
  for (int i : sigma)
    w.a += family.vectors[i] * family.vectors[i].transpose();
  w.trace_a = w.a.trace();

  Eigen::SelfAdjointEigenSolver<Matrix> eig(w.a);
  const Vector ev = eig.eigenvalues();
  if (!(ev.minCoeff() > 0.0) || ev.maxCoeff() / ev.minCoeff() > 1e12)
    throw DegenerateError(
        "witness: sigma vectors do not span R^d (K'_sigma unbounded)");
  w.trace_bound = ev.cwiseInverse().sum();

  if (binomial_capped(2 * static_cast<int>(sigma.size()), d, 1e7) > 1e7)
    throw NumericalError("witness: vertex enumeration cap exceeded");

  std::vector<Halfspace> rows;
  for (int i : sigma) {
    rows.push_back({family.vectors[i], 1.0});
    rows.push_back({-family.vectors[i], 1.0});
  }
  const VPolytope verts = enumerate_vertices(HPolytope(d, std::move(rows)), tol);

  // The squared norm is convex, so its maximum over K'_sigma sits at a
  // vertex; the Ball-Prodromou trace bound guarantees a point of
  // squared norm tr A^{-1} in the strips, so the vertex maximum meets it.
  int best = 0;
  for (int i = 1; i < verts.size(); ++i) {
    if (verts.points[i].squaredNorm() > verts.points[best].squaredNorm())
      best = i;
  }
  w.q = verts.points[best];
  w.norm = w.q.norm();
  w.bound = d / std::sqrt(static_cast<double>(sigma.size()));

  const Matrix asqrt = eig.operatorSqrt();
  const Vector p = asqrt * w.q;
  w.form_value = p.dot(w.a.ldlt().solve(p));

  double feas = 0.0;
  for (int i : sigma)
    feas = std::max(feas, std::fabs(family.vectors[i].dot(w.q)));
  if (feas > 1.0 + 1e-9)
    throw CertificateError("witness: q violates a strip constraint");
  if (w.norm < w.bound - 1e-6)
    throw CertificateError("witness: norm fell below d/sqrt(|sigma|)");
  return w;
}

ConjectureProbe conjecture2_probe(const StripFamily& family,
                                  const Tolerance& tol) {
  const int d = family.dim;
  if (family.size() != 2 * d)
    throw PreconditionError("conjecture2_probe: need exactly 2d vectors");
  for (const Vector& u : family.vectors) {
    if (std::fabs(u.norm() - 1.0) > 1e-9)
      throw PreconditionError("conjecture2_probe: non-unit vector");
  }
  ConjectureProbe probe;
  probe.target = std::sqrt(static_cast<double>(d));

  std::vector<Halfspace> rows;
  for (const Vector& u : family.vectors) rows.push_back({u, 1.0});
  const HPolytope k(d, std::move(rows));
  probe.bounded = check_bounded_full_dim(k, tol).bounded;
  if (!probe.bounded) return probe;

  const VPolytope verts = enumerate_vertices(k, tol);
  int best = 0;
  for (int i = 1; i < verts.size(); ++i) {
    if (verts.points[i].squaredNorm() > verts.points[best].squaredNorm())
      best = i;
  }
  probe.argmax = verts.points[best];
  probe.max_norm = probe.argmax.norm();
  probe.meets_target = probe.max_norm >= probe.target - 1e-6;
  return probe;
}

DiameterGapSummary diameter_gap_experiment(int d, int n, int trials,
                                           std::uint64_t seed,
                                           const Tolerance& tol) {
  if (trials <= 0) throw PreconditionError("diameter_gap_experiment: trials");
  if (n < 2 * d) throw PreconditionError("diameter_gap_experiment: n < 2d");
  DiameterGapSummary sum;
  sum.d = d;
  sum.n = n;
  sum.trials = trials;
  sum.seed = seed;
  sum.norm_bound = d / std::sqrt(2.0 * d);

  const StripFamily fam = sphere_family(d, n, seed);
  sum.covering = covering_radius(fam);

  std::vector<Halfspace> rows;
  for (const Vector& u : fam.vectors) rows.push_back({u, 1.0});
  const HPolytope k(d, std::move(rows));
  sum.diam_full = diameter(enumerate_vertices(k, tol));
  // Support in any direction is at most 1/cos(theta) with theta the angular
  // covering radius; pad the sampled estimate by 10% (d=2 is exact).
  const double margin = (d == 2) ? 1.0 : 1.1;
  const double theta = 2.0 * std::asin(std::min(1.0, sum.covering / 2.0));
  sum.diam_cap = 2.0 / std::cos(std::min(1.5, margin * theta));
  sum.diam_ok = sum.diam_full <= sum.diam_cap + 1e-9;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<int> pool(n);
  const int guard = 100 * trials;
  int attempts = 0;
  while (static_cast<int>(sum.witness_norms.size()) < trials) {
    if (++attempts > guard)
      throw NumericalError("diameter_gap_experiment: too many degenerate draws");
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> sigma;
    for (int pick = 0; pick < 2 * d; ++pick) {
      std::uniform_int_distribution<int> uni(pick, n - 1);
      std::swap(pool[pick], pool[uni(rng)]);
      sigma.push_back(pool[pick]);
    }
    std::sort(sigma.begin(), sigma.end());
    try {
      const LowerBoundWitness w = witness(fam, sigma, tol);
      sum.witness_norms.push_back(w.norm);
      sum.sigmas.push_back(sigma);
    } catch (const DegenerateError&) {
      ++sum.resampled;
    }
  }
  std::vector<double> sorted = sum.witness_norms;
  std::sort(sorted.begin(), sorted.end());
  sum.min_norm = sorted.front();
  const std::size_t mid = sorted.size() / 2;
  sum.median_norm = (sorted.size() % 2 == 1)
                        ? sorted[mid]
                        : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return sum;
}

}  // namespace helly
