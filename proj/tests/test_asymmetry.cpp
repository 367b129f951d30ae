#include "doctest.h"

#include <cmath>

#include "radii/asymmetry.hpp"
#include "radii/errors.hpp"
#include "radii/harness/random.hpp"
#include "radii/harness/shapes.hpp"
#include "radii/lp.hpp"
#include "radii/radii.hpp"

using namespace radii;
namespace h = radii::harness;

namespace {

// Asymmetry from vertices alone: −v_i = c + Σ_j λ_ij u_j, λ_ij ≥ 0,
// Σ_j λ_ij = ρ; minimize ρ. Variables (ρ, c, λ).
Scalar asymmetry_by_vertices(const VPolytope& k) {
  const size_t n = k.dim();
  const auto& vs = k.vertices();
  const size_t m = vs.size();
  const size_t vars = 1 + n + m * m;
  LinearProgram lp{-Vector::unit(vars, 0), {}, {}};
  for (size_t i = 0; i < m; ++i) {
    const size_t base = 1 + n + m * i;
    for (size_t c = 0; c < n; ++c) {
      Vector row(vars);
      row[1 + c] = 1;
      for (size_t j = 0; j < m; ++j) row[base + j] = vs[j][c];
      lp.equalities.push_back({row, -vs[i][c]});
    }
    Vector sum(vars);
    sum[0] = -1;
    for (size_t j = 0; j < m; ++j) {
      sum[base + j] = 1;
      lp.inequalities.push_back({-Vector::unit(vars, base + j), 0});
    }
    lp.equalities.push_back({sum, 0});
  }
  const LPResult r = lp_solve(lp);
  REQUIRE(r.optimal());
  return -*r.value;
}

VPolytope apply_affine(const VPolytope& k, const std::vector<Vector>& rows, const Vector& t) {
  std::vector<Vector> pts;
  for (const auto& v : k.vertices()) {
    Vector w(k.dim());
    for (size_t i = 0; i < k.dim(); ++i) w[i] = dot(rows[i], v) + t[i];
    pts.push_back(w);
  }
  return reduce_v(k.dim(), pts);
}

}  // namespace

TEST_CASE("simplices have asymmetry n") {
  for (size_t n = 2; n <= 4; ++n) {
    CHECK(minkowski_asymmetry(h::standard_simplex(n)).s == static_cast<long>(n));
    CHECK(minkowski_asymmetry(h::random_polytope(n * 17, n, n + 1)).s == static_cast<long>(n));
  }
  CHECK(minkowski_asymmetry(h::tetrahedron_t3()).s == 3);
}

TEST_CASE("symmetric bodies have asymmetry 1") {
  CHECK(minkowski_asymmetry(h::cube(3)).s == 1);
  CHECK(minkowski_asymmetry(h::crosspolytope(4)).s == 1);
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const Gauge g = h::random_gauge(seed, 2 + seed % 2, 4);
    const VPolytope moved = scale_translate(g.body(), 1, Vector::unit(g.dim(), 0) * 7);
    const AsymmetryResult a = minkowski_asymmetry(moved);
    CHECK(a.s == 1);
    CHECK(a.center == Vector::unit(g.dim(), 0) * 7);
  }
}

TEST_CASE("asymmetry agrees with the vertex oracle") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 3);
    CHECK(minkowski_asymmetry(k).s == asymmetry_by_vertices(k));
  }
}

TEST_CASE("centered body satisfies −(K−x) ⊆ s(K−x)") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const size_t n = 2 + seed % 2;
    const AsymmetryResult a = minkowski_asymmetry(h::random_polytope(seed, n, n + 4));
    CHECK(contains_polytope(scale_translate(a.centered_body, a.s, Vector(n)), negate(a.centered_body)));
    CHECK(a.translation == a.center * (-(1 + a.s)));
    CHECK(is_minkowski_centered(a.centered_body));
  }
}

TEST_CASE("asymmetry range and the symmetric case") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    const size_t n = 2 + seed % 2;
    const AsymmetryResult a = minkowski_asymmetry(h::random_polytope(seed, n, n + 2 + seed % 4));
    CHECK(a.s >= 1);
    CHECK(a.s <= static_cast<long>(n));
    CHECK((a.s == 1) == polytope_equal(a.centered_body, negate(a.centered_body)));
  }
}

TEST_CASE("asymmetry is affinely invariant") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const size_t n = 2 + seed % 2;
    h::Rng rng(seed * 977);
    std::vector<Vector> rows;
    do {
      rows.clear();
      for (size_t i = 0; i < n; ++i) rows.push_back(rng.point(n, 5, 3));
    } while (rank(rows, n) < n);
    const VPolytope k = h::random_polytope(seed, n, n + 3);
    CHECK(minkowski_asymmetry(apply_affine(k, rows, rng.point(n))).s == minkowski_asymmetry(k).s);
  }
}

TEST_CASE("asymmetry is supermaximal on random pairs") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 2);
    const VPolytope l = h::random_polytope(seed + 500, n, n + 1);
    const Scalar sum = minkowski_asymmetry(minkowski_sum(k, l)).s;
    CHECK(sum <= max(minkowski_asymmetry(k).s, minkowski_asymmetry(l).s));
  }
}

TEST_CASE("Reuleaux triangle approximant") {
  const VPolytope r = h::reuleaux_polygon(3, 31);
  CHECK(r.size() == 96);
  const double s = minkowski_asymmetry(r).s.to_double();
  const double target = (1 + std::sqrt(3.0)) / 2;
  CHECK(std::abs(s - target) <= 0.02);
  // The inscribed polygon is at most a few sagittas away from the limit.
  CHECK(std::abs(s - target) <= 2e-3);
}

TEST_CASE("lower-dimensional input") {
  const VPolytope tri = h::prism(h::standard_simplex(2), 1, 1);
  CHECK_THROWS_AS(minkowski_asymmetry(tri), InputError);
  const AsymmetryResult a = minkowski_asymmetry(tri, true);
  CHECK(a.s == 2);
  CHECK(a.center == Vector{Scalar(1, 3), Scalar(1, 3), 1});
  const VPolytope point = reduce_v(2, std::vector<Vector>{{1, 1}});
  CHECK_THROWS_AS(minkowski_asymmetry(point, true), InputError);
}

TEST_CASE("jung ratio") {
  const Gauge cross{h::crosspolytope(3)};
  CHECK(jung_ratio(h::tetrahedron_t3(), cross) == Scalar(3, 4));
  CHECK(jung_ratio(cross.body(), cross) == Scalar(1, 2));
  for (size_t n = 2; n <= 4; ++n) {
    const VPolytope s = h::standard_simplex(n);
    CHECK(jung_ratio(s, difference_body(s)) ==
          Scalar(static_cast<long>(n), static_cast<long>(n + 1)));
  }
  CHECK_THROWS_AS(jung_ratio(reduce_v(3, std::vector<Vector>{{1, 2, 3}}), cross), InputError);
}

TEST_CASE("jung ratio is bounded by s/(s+1)") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 3);
    const Gauge b = h::random_gauge(seed + 77, n, n + 1);
    const Scalar s = minkowski_asymmetry(k).s;
    CHECK(jung_ratio(k, b) <= s / (s + 1));
  }
}

TEST_CASE("Banach-Mazur sandwich") {
  const VPolytope tri = reduce_v(2, std::vector<Vector>{{0, 0}, {4, 1}, {1, 3}});
  SandwichCertificate c = bm_sandwich(tri);
  CHECK(c.inner_factor == Scalar(1, 3));
  CHECK(c.outer_factor == Scalar(2, 3));
  CHECK(c.inner_verified);
  CHECK(c.outer_verified);

  c = bm_sandwich(h::cube(3));
  CHECK(c.inner_factor == Scalar(1, 2));
  CHECK(c.outer_factor == Scalar(1, 2));
  CHECK(c.inner_verified);
  CHECK(c.outer_verified);

  c = bm_sandwich(h::tetrahedron_t3());
  CHECK(c.inner_factor == Scalar(1, 4));
  CHECK(c.outer_factor == Scalar(3, 4));
  CHECK(c.inner_verified);
  CHECK(c.outer_verified);
}

TEST_CASE("sandwich inner factor cannot be improved by 1/1000") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 3);
    const AsymmetryResult a = minkowski_asymmetry(k);
    const SandwichCertificate c = bm_sandwich(k);
    CHECK(c.inner_verified);
    CHECK(c.outer_verified);
    const Gauge diff = difference_body(k);
    const Scalar grown = c.inner_factor + Scalar(1, 1000);
    // No translate fits: the inradius of K in the gauge K − K is exactly 1/(1+s).
    CHECK(inradius(k, diff).radius == c.inner_factor);
    CHECK_FALSE(contains_polytope(v_to_h(a.centered_body), scale_translate(diff.body(), grown, Vector(n))));
  }
}

TEST_CASE("minkowski centering") {
  // Centroid at the origin.
  const VPolytope tri = reduce_v(2, std::vector<Vector>{{-1, -1}, {2, -1}, {-1, 2}});
  CHECK(is_minkowski_centered(tri));
  CHECK(is_minkowski_centered(h::cube(2)));
  CHECK_FALSE(is_minkowski_centered(scale_translate(tri, 1, Vector{5, 5})));
}
