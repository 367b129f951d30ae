#include "doctest.h"

#include "radii/asymmetry.hpp"
#include "radii/completeness.hpp"
#include "radii/errors.hpp"
#include "radii/harness/random.hpp"
#include "radii/harness/shapes.hpp"
#include "radii/radii.hpp"

using namespace radii;
namespace h = radii::harness;

namespace {

// Every translated facet v + d·F for every vertex v, then redundancy removal.
HPolytope ball_hull_brute_force(const VPolytope& k, const Gauge& b, const Scalar& d) {
  std::vector<Halfspace> hs;
  for (const auto& v : k.vertices()) {
    for (const auto& f : b.facets().halfspaces()) hs.push_back({f.normal, d * f.offset + dot(f.normal, v)});
  }
  return reduce_h(HPolytope(k.dim(), std::move(hs)));
}

VPolytope flat_simplex() { return h::prism(h::standard_simplex(2), 0, 0); }
VPolytope prism_body() { return h::prism(h::standard_simplex(2), Scalar(-1, 2), Scalar(1, 2)); }

}  // namespace

TEST_CASE("ball hull examples") {
  const Gauge cross{h::crosspolytope(3)};
  const VPolytope t3 = h::tetrahedron_t3();
  CHECK(polytope_equal(t3, ball_hull(t3, cross, Scalar(4, 3))));

  const Gauge cube{h::cube(3)};
  CHECK(polytope_equal(cube.body(), ball_hull(cube.body(), cube, 2)));

  const Gauge square{h::cube(2)};
  const VPolytope two = reduce_v(2, std::vector<Vector>{{0, 0}, {1, 0}});
  const HPolytope hull = ball_hull(two, square, 1);
  const VPolytope expected = reduce_v(2, std::vector<Vector>{{0, -1}, {1, -1}, {0, 1}, {1, 1}});
  CHECK(polytope_equal(expected, hull));
  CHECK(polytope_equal(hull, ball_hull_brute_force(two, square, 1)));

  CHECK_THROWS_AS(ball_hull(two, square, 0), InputError);
}

TEST_CASE("ball hull agrees with brute force and contains K") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 3);
    const Gauge b = h::random_gauge(seed + 40, n, n + 1);
    const Scalar d = diameter(k, b).value;
    const HPolytope hull = ball_hull(k, b, d);
    CHECK(polytope_equal(hull, ball_hull_brute_force(k, b, d)));
    CHECK(contains_polytope(hull, k));
  }
}

TEST_CASE("completeness examples") {
  const Gauge cross{h::crosspolytope(3)};
  CHECK(is_complete(h::tetrahedron_t3(), cross));
  const Gauge square{h::cube(2)};
  CHECK(is_complete(square.body(), square));
  const VPolytope tri = reduce_v(2, std::vector<Vector>{{0, 0}, {1, 0}, {0, 1}});
  CHECK_FALSE(is_complete(tri, square));
  CHECK_THROWS_AS(is_complete(reduce_v(2, std::vector<Vector>{{1, 1}}), square), InputError);

  const Gauge hex = h::hexagonal_prism();
  CHECK(is_complete(prism_body(), hex));
  CHECK_FALSE(is_complete(pseudo_completion(flat_simplex(), hex), hex));
}

TEST_CASE("constant width examples") {
  const Gauge hex = h::hexagonal_prism();
  CHECK(is_constant_width(prism_body(), hex));
  CHECK(is_constant_width(hex.body(), hex));
  const Gauge cross{h::crosspolytope(3)};
  CHECK_FALSE(is_constant_width(h::tetrahedron_t3(), cross));
  CHECK_THROWS_AS(is_constant_width(flat_simplex(), hex), InputError);
}

TEST_CASE("pseudo completion") {
  const Gauge cross{h::crosspolytope(3)};
  CHECK(pseudo_completion(cross.body(), cross) == cross.body());
  CHECK(polytope_equal(pseudo_completion(h::tetrahedron_t3(), cross), h::tetrahedron_t3()));

  // The lexicographic circumcenter of S²×{0} is (1/3, 1/3, −2/3), so the
  // adjoined ball is a hexagonal prism below the plane.
  const Gauge hex = h::hexagonal_prism();
  const Ball c = circumradius(flat_simplex(), hex);
  CHECK(c.center == Vector{Scalar(1, 3), Scalar(1, 3), Scalar(-2, 3)});
  const VPolytope plus = pseudo_completion(flat_simplex(), hex);
  CHECK(polytope_equal(plus, hull_union(flat_simplex(), scale_translate(hex.body(), Scalar(1, 3), c.center))));
}

TEST_CASE("pseudo completion radii on random pairs") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    const size_t n = 2 + seed % 2;
    const VPolytope k = h::random_polytope(seed, n, n + 2);
    const Gauge b = h::random_gauge(seed + 60, n, n + 1);
    const CompletionReport rep = completion_report(k, b);
    CHECK(rep.D_plus == rep.D);
    CHECK(rep.R_plus == rep.R);
    CHECK(rep.r_plus == rep.D - rep.R);
    CHECK(rep.R + rep.r <= rep.D);
    if (rep.R + rep.r == rep.D) CHECK(common_center(k, b).has_value());
  }
}

TEST_CASE("greedy completion") {
  const Gauge cross{h::crosspolytope(3)};
  const GreedyCompletion done = greedy_completion(h::tetrahedron_t3(), cross, 5);
  CHECK(done.converged);
  CHECK(done.rounds == 0);
  CHECK(done.body == h::tetrahedron_t3());

  // Square gauge: the only complete bodies are squares.
  const Gauge square{h::cube(2)};
  const VPolytope tri = reduce_v(2, std::vector<Vector>{{0, 0}, {2, 0}, {0, 1}});
  const GreedyCompletion sq = greedy_completion(tri, square, 10);
  REQUIRE(sq.converged);
  CHECK(contains_polytope(sq.body, tri));
  CHECK(diameter(sq.body, square).value == 2);
  const Ball c = circumradius(sq.body, square);
  CHECK(polytope_equal(sq.body, scale_translate(square.body(), c.radius, c.center)));

  // S²×{0}: the greedy limit is a translate of S²×[−1/2, 1/2], not that body.
  const Gauge hex = h::hexagonal_prism();
  const GreedyCompletion g = greedy_completion(flat_simplex(), hex, 20);
  REQUIRE(g.converged);
  CHECK(is_complete(g.body, hex));
  CHECK(polytope_equal(g.body, h::prism(h::standard_simplex(2), -1, 0)));

  CHECK_THROWS_AS(greedy_completion(tri, square, 0), InputError);
}

TEST_CASE("greedy completion keeps the diameter") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const VPolytope k = h::random_polytope(seed, 2, 4);
    const Gauge b = h::random_gauge(seed + 13, 2, 3);
    const GreedyCompletion g = greedy_completion(k, b, 30);
    CHECK(diameter(g.body, b).value == diameter(k, b).value);
    CHECK(contains_polytope(g.body, k));
    if (g.converged) {
      CHECK(is_complete(g.body, b));
      const Scalar s = minkowski_asymmetry(g.body).s;
      CHECK(jung_ratio(g.body, b) == s / (s + 1));
    }
  }
}

TEST_CASE("completion report") {
  const Gauge cross{h::crosspolytope(3)};
  const CompletionReport t = completion_report(h::tetrahedron_t3(), cross);
  CHECK(t.complete);
  CHECK_FALSE(t.constant_width);

  const Gauge hex = h::hexagonal_prism();
  const CompletionReport self = completion_report(hex.body(), hex);
  CHECK(self.complete);
  CHECK(self.constant_width);

  const CompletionReport s = completion_report(flat_simplex(), hex);
  CHECK(s.R == Scalar(2, 3));
  CHECK(s.D == 1);
  CHECK_FALSE(s.complete);
  CHECK_FALSE(s.constant_width);
}

TEST_CASE("complete bodies: j = s/(s+1), r/D = 1/(s+1), common center") {
  const Gauge cross{h::crosspolytope(3)};
  const Gauge hex = h::hexagonal_prism();
  const std::vector<std::pair<VPolytope, Gauge>> cases{
      {h::tetrahedron_t3(), cross}, {prism_body(), hex}, {h::cube(3), Gauge{h::cube(3)}}};
  for (const auto& [k, b] : cases) {
    REQUIRE(is_complete(k, b));
    const Scalar s = minkowski_asymmetry(k).s;
    const RadiiReport rep = radii_report(k, b);
    CHECK(rep.R / rep.D == s / (s + 1));
    CHECK(rep.r / rep.D == 1 / (s + 1));
    CHECK(rep.R + rep.r == rep.D);
    const auto c = common_center(k, b);
    REQUIRE(c.has_value());
    CHECK(contains_polytope(v_to_h(k), scale_translate(b.body(), rep.r, *c)));
    CHECK(contains_polytope(scaled_gauge(b, rep.R, *c), k));
  }
}
