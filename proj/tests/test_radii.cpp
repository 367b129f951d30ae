#include "doctest.h"

#include "radii/errors.hpp"
#include "radii/harness/random.hpp"
#include "radii/harness/shapes.hpp"
#include "radii/lp.hpp"
#include "radii/radii.hpp"

using namespace radii;
namespace h = radii::harness;

namespace {

// Width as max λ with λ·v_m = x_m − y_m for every gauge vertex v_m, where x_m
// and y_m are convex combinations of the vertices of k.
Scalar width_by_convex_combinations(const VPolytope& k, const Gauge& b) {
  const size_t n = k.dim();
  const auto& kv = k.vertices();
  const auto& bv = b.body().vertices();
  const size_t nk = kv.size();
  const size_t vars = 1 + 2 * nk * bv.size();
  LinearProgram lp{Vector::unit(vars, 0), {}, {}};
  for (size_t m = 0; m < bv.size(); ++m) {
    const size_t mu = 1 + 2 * nk * m;
    const size_t nu = mu + nk;
    for (size_t c = 0; c < n; ++c) {
      Vector row(vars);
      row[0] = bv[m][c];
      for (size_t i = 0; i < nk; ++i) {
        row[mu + i] = -kv[i][c];
        row[nu + i] = kv[i][c];
      }
      lp.equalities.push_back({row, 0});
    }
    Vector smu(vars), snu(vars);
    for (size_t i = 0; i < nk; ++i) {
      smu[mu + i] = 1;
      snu[nu + i] = 1;
      lp.inequalities.push_back({-Vector::unit(vars, mu + i), 0});
      lp.inequalities.push_back({-Vector::unit(vars, nu + i), 0});
    }
    lp.equalities.push_back({smu, 1});
    lp.equalities.push_back({snu, 1});
  }
  const LPResult r = lp_solve(lp);
  REQUIRE(r.optimal());
  return *r.value;
}

// Diameter from the definition over all pairs of input points, in both orders.
Scalar diameter_pairs(std::span<const Vector> pts, const Gauge& b) {
  Scalar best = 0;
  for (const auto& p : pts)
    for (const auto& q : pts) best = max(best, gauge_norm(b, p - q));
  return best;
}

VPolytope flat_simplex_in_prism() {
  return h::prism(h::standard_simplex(2), 0, 0);
}

VPolytope prism_body() { return h::prism(h::standard_simplex(2), Scalar(-1, 2), Scalar(1, 2)); }

}  // namespace

TEST_CASE("circumradius examples") {
  const Gauge cross{h::crosspolytope(3)};
  CHECK(circumradius(h::tetrahedron_t3(), cross).radius == 1);

  const Gauge hex = h::hexagonal_prism();
  CHECK(circumradius(flat_simplex_in_prism(), hex).radius == Scalar(2, 3));

  for (const Gauge& b : {cross, hex, Gauge{h::cube(2)}}) {
    const Ball ball = circumradius(b.body(), b);
    CHECK(ball.radius == 1);
    CHECK(ball.center.is_zero());
  }
}

TEST_CASE("circumcenter is lexicographically minimal and deterministic") {
  // A segment in the cube gauge: many optimal centers.
  const Gauge cube{h::cube(2)};
  const VPolytope seg = reduce_v(2, std::vector<Vector>{{0, 0}, {2, 0}});
  const Ball ball = circumradius(seg, cube);
  CHECK(ball.radius == 1);
  CHECK(ball.center == Vector{1, -1});
  CHECK(circumradius(seg, cube).center == ball.center);
}

TEST_CASE("inradius examples") {
  const Gauge hex = h::hexagonal_prism();
  CHECK(inradius(hex.body(), hex).radius == 1);
  CHECK(inradius(prism_body(), hex).radius == Scalar(1, 3));

  for (size_t n = 2; n <= 4; ++n) {
    const VPolytope s = h::standard_simplex(n);
    const Gauge b = difference_body(s);
    CHECK(inradius(s, b).radius / diameter(s, b).value == Scalar(1, static_cast<long>(n + 1)));
  }
}

TEST_CASE("inradius of a lower-dimensional body uses the section gauge") {
  // Square in the plane z = 0 with the cube gauge: the section is the square, r = 1.
  const Gauge cube{h::cube(3)};
  const VPolytope sq = h::prism(h::cube(2), 0, 0);
  const Ball ball = inradius(sq, cube);
  CHECK(ball.radius == 1);
  CHECK(ball.center == Vector(3));

  const VPolytope point = reduce_v(3, std::vector<Vector>{{1, 2, 3}});
  CHECK(inradius(point, cube).radius == 0);
}

TEST_CASE("diameter examples") {
  const Gauge cross{h::crosspolytope(3)};
  CHECK(diameter(h::tetrahedron_t3(), cross).value == Scalar(4, 3));
  const Gauge hex = h::hexagonal_prism();
  CHECK(diameter(flat_simplex_in_prism(), hex).value == 1);
  const DiameterResult d = diameter(hex.body(), hex);
  CHECK(d.value == 2);
  CHECK(gauge_norm(hex, d.to - d.from) == 2);
}

TEST_CASE("width examples") {
  const Gauge hex = h::hexagonal_prism();
  CHECK(width(hex.body(), hex) == 2);
  CHECK(width(prism_body(), hex) == 1);

  const VPolytope tri = reduce_v(2, std::vector<Vector>{{0, 0}, {3, 1}, {1, 2}});
  const Gauge b = difference_body(tri);
  CHECK(width(tri, b) == diameter(tri, b).value);

  CHECK_THROWS_AS(width(flat_simplex_in_prism(), hex), InputError);
}

TEST_CASE("width agrees with the convex-combination oracle") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const VPolytope k = h::random_polytope(seed, 2, 5);
    const Gauge b = h::random_gauge(seed + 100, 2, 3);
    CHECK(width(k, b) == width_by_convex_combinations(k, b));
  }
  const Gauge cross{h::crosspolytope(3)};
  CHECK(width(h::tetrahedron_t3(), cross) == width_by_convex_combinations(h::tetrahedron_t3(), cross));
}

TEST_CASE("width is tight: λB fits into K − K, (λ + λ/1000)B does not") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 3);
    const Gauge b = h::random_gauge(seed + 50, n, n + 1);
    const Scalar w = width(k, b);
    const Gauge diff = difference_body(k);
    CHECK(contains_polytope(diff.facets(), scale_translate(b.body(), w, Vector(n))));
    CHECK_FALSE(contains_polytope(diff.facets(), scale_translate(b.body(), w + w / 1000, Vector(n))));
  }
}

TEST_CASE("core radius") {
  const Gauge cross{h::crosspolytope(3)};
  const VPolytope t3 = h::tetrahedron_t3();
  CHECK(core_radius(t3, cross, 1) == Scalar(2, 3));
  CHECK(core_radius(t3, cross, 3) == 1);

  for (uint64_t seed = 1; seed <= 8; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 3);
    const Gauge b = h::random_gauge(seed + 7, n, n + 1);
    CHECK(core_radius(k, b, n) == circumradius(k, b).radius);
    const Gauge cube{h::cube(n)};
    CHECK(core_radius(k, cube, 1) == circumradius(k, cube).radius);
  }

  CHECK_THROWS_AS(core_radius(t3, cross, 0), InputError);
  CHECK_THROWS_AS(core_radius(t3, cross, 4), InputError);
}

TEST_CASE("core radius budget") {
  // 40 vertices, kdim 3: C(40, 4) = 91390 fits; kdim 4 in 5D would not, but
  // the budget cut-off is exercised through the count alone.
  std::vector<Vector> pts;
  for (long i = 0; i < 200; ++i) {
    // Points on the moment curve are all extreme.
    pts.push_back(Vector{Scalar(i), Scalar(i * i), Scalar(i * i * i)});
  }
  const VPolytope k = reduce_v(3, pts);
  REQUIRE(k.size() == 200);
  // C(200, 4) > 10^6.
  CHECK_THROWS_AS(core_radius(k, Gauge{h::cube(3)}, 3), CapabilityError);
}

TEST_CASE("euclidean_meb examples") {
  const std::vector<Vector> one{{3, 4}};
  CHECK(euclidean_meb(one).radius_squared == 0);

  const std::vector<Vector> two{{1, 1}, {1, 3}};
  const SquaredBall b2 = euclidean_meb(two);
  CHECK(b2.radius_squared == 1);
  CHECK(b2.center == Vector{1, 2});

  for (size_t n = 2; n <= 6; ++n) {
    const auto pts = h::regular_simplex_points(n);
    const SquaredBall ball = euclidean_meb(pts);
    const Vector edge = pts[0] - pts[1];
    CHECK(ball.radius_squared / dot(edge, edge) ==
          Scalar(static_cast<long>(n), static_cast<long>(2 * (n + 1))));
    CHECK(ball.support.size() == n + 1);
  }
}

TEST_CASE("euclidean_meb invariants on random point sets") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    h::Rng rng(seed);
    const size_t n = 2 + seed % 3;
    std::vector<Vector> pts;
    for (size_t i = 0; i < 12; ++i) pts.push_back(rng.point(n));
    const SquaredBall ball = euclidean_meb(pts);
    for (const auto& p : pts) {
      const Vector d = p - ball.center;
      CHECK(dot(d, d) <= ball.radius_squared);
    }
    // The center lies in the convex hull of the support points; otherwise a
    // smaller ball would exist.
    CHECK(in_convex_hull(ball.support, ball.center));
    for (const auto& p : ball.support) {
      const Vector d = p - ball.center;
      CHECK(dot(d, d) == ball.radius_squared);
    }
  }
}

TEST_CASE("radii_report examples") {
  const Gauge cross{h::crosspolytope(3)};
  const RadiiReport t = radii_report(h::tetrahedron_t3(), cross);
  CHECK(t.R == 1);
  CHECK(t.D == Scalar(4, 3));

  const Gauge hex = h::hexagonal_prism();
  const RadiiReport self = radii_report(hex.body(), hex);
  CHECK(self.R == 1);
  CHECK(self.r == 1);
  CHECK(self.D == 2);
  CHECK(self.w == 2);
  CHECK(self.width_certificate == self.w);
}

TEST_CASE("radii chain and diameter oracle on random pairs") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 4);
    const Gauge b = h::random_gauge(seed + 1000, n, n + 2);
    const RadiiReport rep = radii_report(k, b);
    CHECK(2 * rep.r <= rep.w);
    CHECK(rep.w <= rep.r + rep.R);
    CHECK(rep.r + rep.R <= rep.D);
    CHECK(rep.D <= 2 * rep.R);
    CHECK(rep.D == diameter_pairs(k.vertices(), b));
  }
}

TEST_CASE("radii are translation invariant and positively homogeneous") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const size_t n = 2 + seed % 2;
    h::Rng rng(seed * 31);
    const VPolytope k = h::random_polytope(seed, n, n + 3);
    const Gauge b = h::random_gauge(seed + 3, n, n + 1);
    Scalar rho = rng.rational(12, 4).abs();
    if (rho.is_zero()) rho = Scalar(5, 3);
    const Vector t = rng.point(n);
    const VPolytope k2 = scale_translate(k, rho, t);
    const RadiiReport a = radii_report(k, b);
    const RadiiReport c = radii_report(k2, b);
    CHECK(c.R == rho * a.R);
    CHECK(c.r == rho * a.r);
    CHECK(c.D == rho * a.D);
    CHECK(c.w == rho * a.w);
  }
}

TEST_CASE("R and D are monotone under inclusion") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope outer = h::random_polytope(seed, n, n + 5);
    // A sub-polytope: the hull of all but the last vertex, if full-dimensional.
    std::vector<Vector> sub(outer.vertices().begin(), outer.vertices().end() - 1);
    const VPolytope inner = reduce_v(n, sub);
    const Gauge b = h::random_gauge(seed + 9, n, n + 1);
    CHECK(circumradius(inner, b).radius <= circumradius(outer, b).radius);
    CHECK(diameter(inner, b).value <= diameter(outer, b).value);
  }
}

TEST_CASE("R = r = 1 exactly for translates of the gauge") {
  const Gauge cross{h::crosspolytope(3)};
  const VPolytope moved = scale_translate(cross.body(), 1, Vector{1, Scalar(1, 2), -2});
  CHECK(circumradius(moved, cross).radius == 1);
  CHECK(inradius(moved, cross).radius == 1);
  CHECK(polytope_equal(moved, scale_translate(cross.body(), 1, circumradius(moved, cross).center)));

  const VPolytope t3 = h::tetrahedron_t3();
  const bool both = circumradius(t3, cross).radius == 1 && inradius(t3, cross).radius == 1;
  CHECK_FALSE(both);
}
