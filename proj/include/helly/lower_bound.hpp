#pragma once

#include <cstdint>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/types.hpp"

namespace helly {

/// Family of unit vectors u_i defining strips { |<u_i, x>| <= 1 } and
/// one-sided halfspaces { <u_i, x> <= 1 }.
struct StripFamily {
  int dim = 0;
  std::vector<Vector> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
};

/// Quasi-uniform unit vectors: equispaced angles for d = 2, a Fibonacci
/// lattice for d = 3, and a Kronecker low-discrepancy sequence pushed
/// through Box-Muller otherwise. seed = 0 keeps the canonical orientation;
/// other seeds apply a deterministic rotation / phase.
StripFamily sphere_family(int d, int n, std::uint64_t seed);

/// The 2d coordinate directions +-e_i.
StripFamily axis_aligned_family(int d);

/// Max over sampled directions of the Euclidean distance to the nearest
/// family vector. Exact for d = 2 (computed from the angular gaps).
double covering_radius(const StripFamily& family);

/// Constructive norm witness: the vertex of the strip intersection
/// K'_sigma maximizing the Euclidean norm. Its norm is at least
/// sqrt(tr A^{-1}) >= d / sqrt(|sigma|), A = sum of u_i (x) u_i.
struct LowerBoundWitness {
  std::vector<int> sigma;
  Matrix a;                // sum u_i u_i^T
  Vector q;                // maximizing vertex of K'_sigma
  double norm = 0.0;       // |q|
  double bound = 0.0;      // d / sqrt(|sigma|)
  double trace_bound = 0.0;  // tr A^{-1}
  double form_value = 0.0;   // <p, A^{-1} p> at p = A^{1/2} q  (= norm^2)
  double trace_a = 0.0;      // tr A = |sigma| for unit vectors
};

LowerBoundWitness witness(const StripFamily& family,
                          const std::vector<int>& sigma,
                          const Tolerance& tol = {});

/// One-sided probe for the sqrt(d) conjecture on exactly 2d unit vectors.
/// Report-valued: nothing is asserted about the conjecture itself.
struct ConjectureProbe {
  bool bounded = false;
  double max_norm = 0.0;
  Vector argmax;
  double target = 0.0;        // sqrt(d)
  bool meets_target = false;  // max_norm >= sqrt(d) - 1e-6
};

ConjectureProbe conjecture2_probe(const StripFamily& family,
                                  const Tolerance& tol = {});

/// Randomized sweep: witnesses for `trials` subsets of size 2d, plus the
/// near-ball check on the full family.
struct DiameterGapSummary {
  int d = 0, n = 0, trials = 0;
  std::uint64_t seed = 0;
  double covering = 0.0;
  double diam_full = 0.0;      // diameter of K = intersection of halfspaces
  double diam_cap = 0.0;       // 2 (1 + f(covering)), slack-adjusted
  bool diam_ok = false;
  int resampled = 0;           // span-deficient draws replaced
  std::vector<double> witness_norms;
  double min_norm = 0.0;
  double median_norm = 0.0;
  double norm_bound = 0.0;     // d / sqrt(2d)
  std::vector<std::vector<int>> sigmas;
};

DiameterGapSummary diameter_gap_experiment(int d, int n, int trials,
                                           std::uint64_t seed,
                                           const Tolerance& tol = {});

}  // namespace helly
