#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>
#include <set>

#include "helly/geometry.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace helly;
using oracles::v2;

namespace {

VPolytope unit_cube_vertices(int d) {
  std::vector<Vector> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vector p(d);
    for (int j = 0; j < d; ++j) p[j] = (mask >> j) & 1;
    pts.push_back(p);
  }
  return VPolytope(d, std::move(pts));
}

VPolytope square_pm1() {
  return VPolytope(2, {v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)});
}

}  // namespace

TEST_CASE("boundedness and dimension screen") {
  CHECK(check_bounded_full_dim(builders::cube(3)).bounded);
  CHECK(check_bounded_full_dim(builders::cube(3)).full_dim);

  // single halfspace: unbounded
  Vector e1 = Vector::Zero(2);
  e1[0] = 1.0;
  HPolytope half(2, {{e1, 1.0}});
  CHECK(!check_bounded_full_dim(half).bounded);

  // x1 <= 0, -x1 <= 0, |x2| <= 1: a flat slab, bounded but inradius 0
  Vector e2 = Vector::Zero(2);
  e2[1] = 1.0;
  HPolytope flat(2, {{e1, 0.0}, {-e1, 0.0}, {e2, 1.0}, {-e2, 1.0}});
  const auto rep = check_bounded_full_dim(flat);
  CHECK(rep.bounded);
  CHECK(!rep.full_dim);
  CHECK_THROWS_AS(enumerate_vertices(flat), DegenerateError);
  CHECK_THROWS_AS(enumerate_vertices(half), UnboundedError);
}

TEST_CASE("cube and simplex vertices") {
  const VPolytope v = enumerate_vertices(builders::cube(3));
  REQUIRE(v.size() == 8);
  for (const Vector& p : v.points) {
    CHECK(std::fabs(std::fabs(p[0]) - 1.0) < 1e-12);
    CHECK(std::fabs(std::fabs(p[1]) - 1.0) < 1e-12);
    CHECK(std::fabs(std::fabs(p[2]) - 1.0) < 1e-12);
  }

  const VPolytope s = enumerate_vertices(builders::standard_simplex(2));
  REQUIRE(s.size() == 3);   // (0,0), (1,0), (0,1)
  std::set<std::pair<int, int>> got;
  for (const Vector& p : s.points)
    got.insert({static_cast<int>(std::lround(p[0])),
                static_cast<int>(std::lround(p[1]))});
  CHECK(got == std::set<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("random 2-D vertex counts match the clipping oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const HPolytope k = builders::random_instance(2, 10, rng);
    const VPolytope v = enumerate_vertices(k);
    const auto poly = oracles::halfplane_intersection(k);
    const auto corners = oracles::polygon_vertices(poly);
    CHECK(v.size() == static_cast<int>(corners.size()));
  }
}

TEST_CASE("hull facets of squares, simplices, circles") {
  CHECK(hull_facets(square_pm1()).size() == 4);

  const auto rs = builders::regular_simplex_vertices(3);
  CHECK(hull_facets(VPolytope(3, rs)).size() == 4);

  // 20 points on a circle: 20 facets whose incidences are consecutive in
  // angular order.
  const int n = 20;
  std::vector<Vector> circ;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    circ.push_back(v2(std::cos(a), std::sin(a)));
  }
  const auto facets = hull_facets(VPolytope(2, circ));
  REQUIRE(facets.size() == static_cast<std::size_t>(n));
  for (const HullFacet& f : facets) {
    REQUIRE(f.incident.size() == 2);
    const int gap = std::abs(f.incident[0] - f.incident[1]);
    CHECK((gap == 1 || gap == n - 1));   // cyclic adjacency
  }
}

TEST_CASE("volume: cubes, triangles, shoelace oracle") {
  CHECK(volume(unit_cube_vertices(3)) == doctest::Approx(1.0));
  CHECK(volume(VPolytope(2, {v2(0, 0), v2(1, 0), v2(0, 1)})) ==
        doctest::Approx(0.5));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = builders::random_points(2, 8, 2.0, rng);
    double vol;
    try {
      vol = volume(VPolytope(2, pts));
    } catch (const DegenerateError&) {
      continue;   // collinear draw
    }
    const double oracle = oracles::shoelace_area(
        [&] {
          std::vector<Vector> hull_pts;
          const auto f = hull_facets(VPolytope(2, pts));
          std::set<int> on;
          for (const auto& fc : f) on.insert(fc.incident.begin(), fc.incident.end());
          for (int i : on) hull_pts.push_back(pts[i]);
          return hull_pts;
        }());
    CHECK(vol == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("centroid: triangle, symmetry, Monte Carlo") {
  const Vector c =
      centroid_of_hull(VPolytope(2, {v2(0, 0), v2(3, 0), v2(0, 3)}));
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(1.0));

  CHECK(centroid_of_hull(square_pm1()).norm() < 1e-12);

  std::mt19937_64 rng(11);
  const HPolytope k = builders::random_instance(3, 12, rng);
  const VPolytope verts = enumerate_vertices(k);
  const Vector cen = measure_hpolytope(k, verts).centroid;
  const auto mc = oracles::mc_centroid(k, verts.points, 2'000'000, 99);
  for (int i = 0; i < 3; ++i)
    CHECK(std::fabs(cen[i] - mc.centroid[i]) <= mc.stderr3[i]);
}

TEST_CASE("diameter basics") {
  VPolytope cube01 = unit_cube_vertices(3);
  CHECK(diameter(cube01) == doctest::Approx(std::sqrt(3.0)));
  CHECK(diameter(VPolytope(2, {v2(0, 0), v2(0, 5)})) == doctest::Approx(5.0));

  const int n = 8;   // even regular n-gon: diameter = 2 * circumradius
  std::vector<Vector> gon;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    gon.push_back(v2(3.0 * std::cos(a), 3.0 * std::sin(a)));
  }
  CHECK(diameter(VPolytope(2, gon)) == doctest::Approx(6.0));
}

TEST_CASE("gauge: square, zero, pentagon support oracle") {
  CHECK(gauge(square_pm1(), v2(2, 0)) == doctest::Approx(2.0));
  CHECK(gauge(square_pm1(), v2(0, 0)) == doctest::Approx(0.0));

  std::vector<Vector> pent;
  for (int i = 0; i < 5; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 5 + 0.3;
    pent.push_back(v2(std::cos(a) + 0.1, std::sin(a) - 0.05));
  }
  const VPolytope P(2, pent);
  std::vector<std::pair<Vector, double>> sup;
  for (const HullFacet& f : hull_facets(P)) sup.push_back({f.normal, f.offset});
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Vector x = 2.0 * builders::random_direction(2, rng);
    CHECK(gauge(P, x) ==
          doctest::Approx(oracles::support_gauge(sup, x)).epsilon(1e-9));
  }
}

TEST_CASE("gauge requires an interior origin") {
  const VPolytope off(2, {v2(1, 1), v2(2, 1), v2(2, 2), v2(1, 2)});
  CHECK_THROWS_AS(gauge(off, v2(1, 0)), NotInteriorError);
}

TEST_CASE("ray_boundary on the square and a triangle oracle") {
  auto [y1, t1] = ray_boundary(square_pm1(), v2(1, 0));
  CHECK(t1 == doctest::Approx(1.0));
  CHECK((y1 - v2(1, 0)).norm() < 1e-9);

  auto [y2, t2] = ray_boundary(square_pm1(), v2(1, 1));
  CHECK(t2 == doctest::Approx(1.0));
  CHECK((y2 - v2(1, 1)).norm() < 1e-9);

  // triangle with a ray toward an edge midpoint: intersect the segment
  // directly as the oracle.
  const Vector a = v2(1.0, -0.8), b = v2(0.2, 1.4), c = v2(-1.3, -0.4);
  const VPolytope tri(2, {a, b, c});
  const Vector mid = 0.5 * (a + b);
  auto [y, t] = ray_boundary(tri, mid);
  // segment a-b: param s along (b-a); solve y = a + s (b - a)
  const Vector e = b - a;
  const double s = (y - a).dot(e) / e.squaredNorm();
  CHECK(s == doctest::Approx(0.5).epsilon(1e-9));
  CHECK((y - (a + s * e)).norm() < 1e-9);
  CHECK(t == doctest::Approx(1.0));
}

TEST_CASE("extreme points: square plus center, simplex, hull oracle") {
  VPolytope sq(2, {v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1), v2(0, 0)});
  CHECK(extreme_points(sq) == std::vector<int>{0, 1, 2, 3});

  const auto rs = builders::regular_simplex_vertices(4);
  CHECK(extreme_points(VPolytope(4, rs)).size() == 5);

  std::mt19937_64 rng(13);
  const auto pts = builders::random_points(2, 50, 1.5, rng);
  const VPolytope P(2, pts);
  const auto ext = extreme_points(P);
  std::set<int> on_hull;
  for (const HullFacet& f : hull_facets(P))
    on_hull.insert(f.incident.begin(), f.incident.end());
  CHECK(std::set<int>(ext.begin(), ext.end()) == on_hull);
}

TEST_CASE("property: conv(vertices) reproduces K") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const HPolytope k = builders::random_instance(d, 12, rng);
    const VPolytope v = enumerate_vertices(k);
    // every vertex satisfies all constraints
    for (const Vector& x : v.points) {
      for (const Halfspace& h : k.halfspaces) {
        CHECK(h.normal.dot(x) <=
              h.offset + 1e-8 * (1.0 + std::fabs(h.offset) + x.norm()));
      }
    }
    // every constraint is tight at a vertex or redundant
    for (int i = 0; i < k.size(); ++i) {
      bool tight = false;
      for (const Vector& x : v.points) {
        if (std::fabs(k.halfspaces[i].normal.dot(x) - k.halfspaces[i].offset) <=
            1e-7 * (1.0 + x.norm()))
          tight = true;
      }
      if (tight) continue;
      LPProblem lp(d);
      lp.objective = k.halfspaces[i].normal;
      for (int j = 0; j < k.size(); ++j) {
        if (j == i) continue;
        lp.add_row(k.halfspaces[j].normal, RowSense::LE, k.halfspaces[j].offset);
      }
      const LPSolution s = solve_lp(lp);
      REQUIRE(s.status == LPStatus::Optimal);
      CHECK(s.value <= k.halfspaces[i].offset + 1e-7);   // redundant
    }
  }
}

TEST_CASE("property: gauge positive homogeneity, 1e4 trials") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> uni(0.1, 5.0);
  const VPolytope P(2, builders::random_points(2, 12, 1.0, rng));
  if (!origin_interior_to_hull(P.points, 2)) return;   // rare; skip draw
  for (int t = 0; t < 10'000; ++t) {
    const Vector x = builders::random_direction(2, rng);
    const double s = uni(rng);
    const double g1 = gauge(P, x);
    const double g2 = gauge(P, s * x);
    CHECK(g2 == doctest::Approx(s * g1).epsilon(1e-9));
  }
}

TEST_CASE("property: ray boundary point has gauge one") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const auto pts = builders::random_points(d, 14, 1.0, rng);
    if (!origin_interior_to_hull(pts, d)) continue;
    const VPolytope P(d, pts);
    const Vector dir = builders::random_direction(d, rng);
    auto [y, t] = ray_boundary(P, dir);
    CHECK(gauge(P, y) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("property: translation equivariance of volume and centroid") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = builders::random_points(2, 9, 1.0, rng);
    VPolytope P(2, pts);
    double vol0;
    Vector cen0;
    try {
      vol0 = volume(P);
      cen0 = centroid_of_hull(P);
    } catch (const DegenerateError&) {
      continue;
    }
    const Vector a = 3.0 * builders::random_direction(2, rng);
    std::vector<Vector> moved;
    for (const Vector& p : pts) moved.push_back(p + a);
    VPolytope Q(2, moved);
    CHECK(volume(Q) == doctest::Approx(vol0).epsilon(1e-9));
    CHECK((centroid_of_hull(Q) - (cen0 + a)).norm() <=
          1e-9 * (1.0 + cen0.norm() + a.norm()));
  }
}

TEST_CASE("property: diameter invariant under orthogonal maps") {
  std::mt19937_64 rng(80);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 3;
    const auto pts = builders::random_points(d, 10, 2.0, rng);
    Matrix g(d, d);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = gauss(rng);
    const Matrix q = Eigen::HouseholderQR<Matrix>(g).householderQ();
    std::vector<Vector> rot;
    for (const Vector& p : pts) rot.push_back(q * p);
    CHECK(diameter(VPolytope(d, rot)) ==
          doctest::Approx(diameter(VPolytope(d, pts))).epsilon(1e-9));
  }
}
