// One PASS/FAIL line per acceptance criterion, with wall time.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "radii/asymmetry.hpp"
#include "radii/completeness.hpp"
#include "radii/harness/fixtures.hpp"
#include "radii/harness/shapes.hpp"
#include "radii/harness/suites.hpp"
#include "radii/radii.hpp"

using namespace radii;
using namespace radii::harness;

namespace {

struct Outcome {
  std::vector<std::string> problems;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void absorb(const SuiteResult& r) {
    for (const auto& f : r.failures) {
      problems.push_back(r.suite + " seed " + std::to_string(f.seed) + ": " + f.quantity + " expected " + f.expected +
                         " got " + f.got);
    }
    for (const auto& n : r.notes) notes.push_back(r.suite + ": " + n);
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.problems.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0 && secs >= budget_seconds) {
    o.problems.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(budget_seconds) + " s");
  }
  const bool ok = o.problems.empty();
  if (!ok) ++failures;
  std::printf("%s  criterion %2d  %-52s %8.3f s\n", ok ? "PASS" : "FAIL", id, title, secs);
  for (const auto& p : o.problems) std::printf("        - %s\n", p.c_str());
  for (const auto& n : o.notes) std::printf("        . %s\n", n.c_str());
}

}  // namespace

int main() {
  criterion(1, "crosspolytope fixture", 1.0, [](Outcome& o) {
    const VPolytope t = tetrahedron_t3();
    const Gauge b{crosspolytope(3)};
    o.require(circumradius(t, b).radius == 1, "R(T3) = 1");
    o.require(diameter(t, b).value == Scalar(4, 3), "D(T3) = 4/3");
    o.require(jung_ratio(t, b) == Scalar(3, 4), "j(T3) = 3/4");
    o.require(minkowski_asymmetry(t).s == 3, "s(T3) = 3");
    o.require(is_complete(t, b), "T3 complete");
    o.require(!is_constant_width(t, b), "T3 not of constant width");
  });

  criterion(2, "hexagonal prism fixture", 5.0, [](Outcome& o) {
    const Gauge b = hexagonal_prism();
    const VPolytope s = flat_triangle();
    const VPolytope k = triangle_prism();
    o.require(minkowski_asymmetry(k).s == 2, "s(K) = 2");
    o.require(is_constant_width(k, b), "K of constant width");
    o.require(circumradius(s, b).radius == Scalar(2, 3), "R(S) = 2/3");
    o.require(diameter(s, b).value == 1, "D(S) = 1");
    const VPolytope plus = pseudo_completion(s, b);
    o.require(polytope_equal(plus, prism(standard_simplex(2), Scalar(-1, 3), Scalar(1, 3))),
              "pseudo_completion(S) = conv(S2 x [-1/3,1/3])");
    o.require(!is_complete(plus, b), "S+ not complete");
    const GreedyCompletion g = greedy_completion(s, b, 20);
    o.require(g.converged && polytope_equal(g.body, k), "greedy_completion(S) converges to K");
    o.notes.push_back("greedy limit is S2 x [-1,0] (translate of K by -e3/2): " +
                      std::string(polytope_equal(g.body, prism(standard_simplex(2), -1, 0)) ? "yes" : "no"));
  });

  criterion(3, "chain suite, 200 random pairs", 60.0, [](Outcome& o) {
    const SuiteResult r = suite_chain({1, 200});
    o.absorb(r);
    o.require(r.cases >= 200, "at least 200 cases");
  });

  criterion(4, "complete bodies: j, r/D, R+r=D, common center", 0, [](Outcome& o) { o.absorb(suite_s_link({1, {}})); });

  criterion(5, "Euclidean Jung, regular simplices n=2..6", 5.0, [](Outcome& o) {
    for (size_t n = 2; n <= 6; ++n) {
      const auto pts = regular_simplex_points(n);
      const SquaredBall ball = euclidean_meb(pts);
      const Vector e = pts[0] - pts[1];
      o.require(ball.radius_squared / dot(e, e) == Scalar(static_cast<long>(n), static_cast<long>(2 * (n + 1))),
                "R^2/D^2 = n/(2(n+1)) at n = " + std::to_string(n));
    }
  });

  criterion(6, "Reuleaux 96-gon asymmetry within 0.02", 5.0, [](Outcome& o) {
    const double s = reuleaux_asymmetry();
    const double err = std::abs(s - (1 + std::sqrt(3.0)) / 2);
    o.require(err <= kReuleauxTolerance, "|s - (1+sqrt3)/2| <= 0.02");
    char buf[96];
    std::snprintf(buf, sizeof buf, "s = %.9f, |error| = %.3e (derived bound %.0e)", s, err, kReuleauxDerivedBound);
    o.notes.push_back(buf);
  });

  criterion(7, "Bohnenblust suite, 200 samples per n", 0, [](Outcome& o) { o.absorb(suite_bohnenblust({1, 200})); });

  criterion(8, "core-radius suite", 0, [](Outcome& o) { o.absorb(suite_core_radius({1, 100})); });

  criterion(9, "Banach-Mazur sandwich, 100 bodies", 0, [](Outcome& o) { o.absorb(suite_sandwich({1, 100})); });

  criterion(10, "supermaximality and the property (B) pair", 0,
            [](Outcome& o) { o.absorb(suite_supermaximality({1, 100})); });

  criterion(11, "parallelotope degeneracy", 0, [](Outcome& o) { o.absorb(suite_parallelotope({1, 20})); });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
