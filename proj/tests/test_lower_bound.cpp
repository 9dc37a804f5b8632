#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "helly/lower_bound.hpp"
#include "support/builders.hpp"

using namespace helly;

TEST_CASE("equispaced d=2 family with seed 0 and n=4 is axis-aligned") {
  const StripFamily fam = sphere_family(2, 4, 0);
  REQUIRE(fam.size() == 4);
  const StripFamily axes = axis_aligned_family(2);
  for (const Vector& u : fam.vectors) {
    bool matched = false;
    for (const Vector& a : axes.vectors)
      if ((u - a).norm() < 1e-12) matched = true;
    CHECK(matched);
  }
}

TEST_CASE("covering radius of 360 equispaced directions") {
  const StripFamily fam = sphere_family(2, 360, 7);
  CHECK(covering_radius(fam) <= 2.0 * std::numbers::pi / 360.0 + 1e-9);
}

TEST_CASE("all family norms are unit") {
  for (auto [d, n] : {std::pair{3, 200}, std::pair{4, 64}, std::pair{5, 48}}) {
    const StripFamily fam = sphere_family(d, n, 5);
    REQUIRE(fam.size() == n);
    for (const Vector& u : fam.vectors)
      CHECK(std::fabs(u.norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("orthonormal strips: the exact equality case") {
  const StripFamily axes = axis_aligned_family(2);
  const LowerBoundWitness w = witness(axes, {0, 2});   // +e1, +e2
  CHECK(w.norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(w.bound == doctest::Approx(std::sqrt(2.0)));
  CHECK(w.trace_bound == doctest::Approx(2.0));   // A = I: tr A^{-1} = d
  CHECK(w.trace_a == doctest::Approx(2.0));
  CHECK(w.form_value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("witness on random sigma draws from a dense 3-D family") {
  const StripFamily fam = sphere_family(3, 200, 1);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> sigma;
    std::uniform_int_distribution<int> uni(0, fam.size() - 1);
    while (sigma.size() < 6) {
      const int i = uni(rng);
      if (std::find(sigma.begin(), sigma.end(), i) == sigma.end())
        sigma.push_back(i);
    }
    std::sort(sigma.begin(), sigma.end());
    const LowerBoundWitness w = witness(fam, sigma);
    CHECK(w.norm >= 3.0 / std::sqrt(6.0) - 1e-6);
    CHECK(w.form_value >= w.trace_bound - 1e-6);
    CHECK(w.trace_bound >= 9.0 / 6.0 - 1e-9);
    CHECK(w.trace_a == doctest::Approx(6.0).epsilon(1e-9));
    // feasibility in the strips
    for (int i : sigma)
      CHECK(std::fabs(fam.vectors[i].dot(w.q)) <= 1.0 + 1e-9);

    // Convex maximization: random interior samples never beat the vertex.
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < 50; ++s) {
      Vector x(3);
      for (int j = 0; j < 3; ++j) x[j] = gauss(rng);
      double worst = 0.0;
      for (int i : sigma)
        worst = std::max(worst, std::fabs(fam.vectors[i].dot(x)));
      if (worst > 1.0) x /= worst;
      CHECK(x.norm() <= w.norm + 1e-9);
    }
  }
}

TEST_CASE("witness symmetry under negating the family") {
  const StripFamily fam = sphere_family(3, 60, 9);
  StripFamily neg = fam;
  for (Vector& u : neg.vectors) u = -u;
  const std::vector<int> sigma{0, 7, 13, 21, 34, 55};
  const LowerBoundWitness a = witness(fam, sigma);
  const LowerBoundWitness b = witness(neg, sigma);
  CHECK(a.norm == doctest::Approx(b.norm).epsilon(1e-9));
}

TEST_CASE("span-deficient sigma is rejected") {
  const StripFamily axes = axis_aligned_family(3);
  CHECK_THROWS_AS(witness(axes, {0, 1}), DegenerateError);   // +-e1 only
}

TEST_CASE("conjecture probe: axis preset reaches sqrt(d)") {
  const ConjectureProbe p = conjecture2_probe(axis_aligned_family(2));
  REQUIRE(p.bounded);
  CHECK(p.max_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(p.meets_target);
}

TEST_CASE("conjecture probe: rotated square, and a span-deficient report") {
  // 4 equispaced directions offset by 45 degrees: the same square rotated.
  StripFamily rot;
  rot.dim = 2;
  for (int k = 0; k < 4; ++k) {
    const double a = std::numbers::pi / 4.0 + k * std::numbers::pi / 2.0;
    Vector u(2);
    u << std::cos(a), std::sin(a);
    rot.vectors.push_back(u);
  }
  const ConjectureProbe p = conjecture2_probe(rot);
  REQUIRE(p.bounded);
  CHECK(p.max_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  StripFamily flat;
  flat.dim = 2;
  Vector e1(2);
  e1 << 1.0, 0.0;
  flat.vectors = {e1, -e1, e1, -e1};
  CHECK(!conjecture2_probe(flat).bounded);
}

TEST_CASE("diameter gap experiment at d=2") {
  const DiameterGapSummary sum = diameter_gap_experiment(2, 360, 30, 77);
  CHECK(sum.min_norm >= 1.0 - 1e-6);         // d/sqrt(2d) = 1 at d=2
  CHECK(sum.diam_ok);
  CHECK(sum.diam_full <= 2.0 * 1.01);
  CHECK(static_cast<int>(sum.witness_norms.size()) == 30);
  // reproducibility
  const DiameterGapSummary again = diameter_gap_experiment(2, 360, 30, 77);
  CHECK(again.witness_norms == sum.witness_norms);
}

TEST_CASE("diameter gap experiment at d=3") {
  const DiameterGapSummary sum = diameter_gap_experiment(3, 200, 20, 78);
  CHECK(sum.min_norm >= 3.0 / std::sqrt(6.0) - 1e-6);
  CHECK(sum.diam_ok);
}
