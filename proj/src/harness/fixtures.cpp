#include "radii/harness/fixtures.hpp"

#include "radii/asymmetry.hpp"
#include "radii/completeness.hpp"
#include "radii/errors.hpp"
#include "radii/harness/random.hpp"
#include "radii/harness/shapes.hpp"
#include "radii/radii.hpp"

namespace radii::harness {

std::string render(const Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<Scalar>(v).str();
}

const char* to_string(Origin o) {
  switch (o) {
    case Origin::stated: return "stated";
    case Origin::derived: return "derived";
    case Origin::trivial: return "trivial";
  }
  return "?";
}

VPolytope flat_triangle() { return prism(standard_simplex(2), 0, 0); }
VPolytope triangle_prism() { return prism(standard_simplex(2), Scalar(-1, 2), Scalar(1, 2)); }

namespace {

using enum Origin;

enum class Q { R, r, D, w, j, s, r_over_D };

// Checks capture copies of (k, b) so that a Fixture is self-contained.
Check radius_check(std::string label, Q q, Scalar expected, Origin o, const VPolytope& k, const Gauge& b) {
  auto f = [q, k, b]() -> Value {
    switch (q) {
      case Q::R: return circumradius(k, b).radius;
      case Q::r: return inradius(k, b).radius;
      case Q::D: return diameter(k, b).value;
      case Q::w: return width(k, b);
      case Q::j: return jung_ratio(k, b);
      case Q::s: return minkowski_asymmetry(k).s;
      case Q::r_over_D: return inradius(k, b).radius / diameter(k, b).value;
    }
    throw std::logic_error("radius_check: unhandled quantity");
  };
  return Check{std::move(label), std::move(expected), o, std::move(f)};
}

Check flag_check(std::string q, bool expected, Origin o, std::function<bool()> f) {
  return Check{std::move(q), expected, o, [f = std::move(f)] { return Value(f()); }};
}

Fixture crosspolytope_t3() {
  const VPolytope t = tetrahedron_t3();
  const Gauge b{crosspolytope(3)};
  Fixture fx{"crosspolytope-T3", t, b, {}};
  fx.checks.push_back(radius_check("R", Q::R, 1, stated, t, b));
  fx.checks.push_back(radius_check("D", Q::D, Scalar(4, 3), stated, t, b));
  fx.checks.push_back(radius_check("j", Q::j, Scalar(3, 4), stated, t, b));
  fx.checks.push_back(radius_check("s", Q::s, 3, stated, t, b));
  fx.checks.push_back(radius_check("r", Q::r, Scalar(1, 3), derived, t, b));
  fx.checks.push_back(flag_check("complete", true, stated, [t, b] { return is_complete(t, b); }));
  fx.checks.push_back(flag_check("constant_width", false, derived, [t, b] { return is_constant_width(t, b); }));
  fx.checks.push_back(flag_check("ball_hull(T3) = T3", true, stated,
                                 [t, b] { return polytope_equal(t, ball_hull(t, b, Scalar(4, 3))); }));
  fx.checks.push_back(flag_check("pseudo_completion(T3) = T3", true, derived,
                                 [t, b] { return polytope_equal(pseudo_completion(t, b), t); }));
  return fx;
}

Fixture hexagonal_prism_fixture() {
  const Gauge b = hexagonal_prism();
  const VPolytope s = flat_triangle();
  const VPolytope k = triangle_prism();
  Fixture fx{"hexagonal-prism", k, b, {}};
  fx.checks.push_back(radius_check("s(K)", Q::s, 2, stated, k, b));
  fx.checks.push_back(flag_check("constant_width(K)", true, stated, [k, b] { return is_constant_width(k, b); }));
  fx.checks.push_back(flag_check("complete(K)", true, derived, [k, b] { return is_complete(k, b); }));
  fx.checks.push_back(radius_check("r(K)", Q::r, Scalar(1, 3), derived, k, b));
  fx.checks.push_back(radius_check("w(K)", Q::w, 1, derived, k, b));
  fx.checks.push_back(radius_check("R(S)", Q::R, Scalar(2, 3), stated, s, b));
  fx.checks.push_back(radius_check("D(S)", Q::D, 1, stated, s, b));
  fx.checks.push_back(flag_check("pseudo_completion(S) = S2 x [-1/3,1/3]", true, stated, [s, b] {
    return polytope_equal(pseudo_completion(s, b), prism(standard_simplex(2), Scalar(-1, 3), Scalar(1, 3)));
  }));
  fx.checks.push_back(flag_check("complete(S+)", false, stated,
                                 [s, b] { return is_complete(pseudo_completion(s, b), b); }));
  fx.checks.push_back(flag_check("greedy_completion(S) converges to K", true, stated, [s, b, k] {
    const GreedyCompletion g = greedy_completion(s, b, 20);
    return g.converged && polytope_equal(g.body, k);
  }));
  return fx;
}

// A seeded random triangle; no parallelotope gauge has it complete.
VPolytope non_homothet(size_t n) { return random_polytope(4242 + n, n, n + 1); }

Fixture parallelotope() {
  const Gauge b{cube(3)};
  const VPolytope skew = reduce_v(2, std::vector<Vector>{{2, 1}, {0, 1}, {-2, -1}, {0, -1}});
  const Gauge sb{skew};
  Fixture fx{"parallelotope", b.body(), b, {}};
  fx.checks.push_back(radius_check("j(B)", Q::j, Scalar(1, 2), stated, b.body(), b));
  fx.checks.push_back(flag_check("complete(B)", true, stated, [b] { return is_complete(b.body(), b); }));
  fx.checks.push_back(flag_check("complete(random K)", false, stated, [b] { return is_complete(non_homothet(3), b); }));
  fx.checks.push_back(radius_check("j(P)", Q::j, Scalar(1, 2), stated, skew, sb));
  fx.checks.push_back(flag_check("complete(P)", true, stated, [sb] { return is_complete(sb.body(), sb); }));
  fx.checks.push_back(flag_check("complete(random K in P)", false, stated,
                                 [sb] { return is_complete(non_homothet(2), sb); }));
  return fx;
}

Fixture simplex_difference_body(size_t n) {
  const VPolytope s = standard_simplex(n);
  const Gauge b = difference_body(s);
  const long ln = static_cast<long>(n);
  Fixture fx{"simplex-difference-body-" + std::to_string(n), s, b, {}};
  fx.checks.push_back(radius_check("s", Q::s, ln, stated, s, b));
  fx.checks.push_back(radius_check("j", Q::j, Scalar(ln, ln + 1), derived, s, b));
  fx.checks.push_back(radius_check("r/D", Q::r_over_D, Scalar(1, ln + 1), stated, s, b));
  fx.checks.push_back(radius_check("D", Q::D, 1, trivial, s, b));
  fx.checks.push_back(radius_check("w", Q::w, 1, trivial, s, b));
  fx.checks.push_back(flag_check("complete", true, derived, [s, b] { return is_complete(s, b); }));
  fx.checks.push_back(flag_check("constant_width", true, trivial, [s, b] { return is_constant_width(s, b); }));
  return fx;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"crosspolytope-T3", "hexagonal-prism", "parallelotope",
                                              "simplex-difference-body-2", "simplex-difference-body-3"};
  return names;
}

Fixture make_fixture(std::string_view name) {
  if (name == "crosspolytope-T3") return crosspolytope_t3();
  if (name == "hexagonal-prism") return hexagonal_prism_fixture();
  if (name == "parallelotope") return parallelotope();
  if (name == "simplex-difference-body-2") return simplex_difference_body(2);
  if (name == "simplex-difference-body-3") return simplex_difference_body(3);
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace radii::harness
