#include "radii/completeness.hpp"

#include <stdexcept>

#include "radii/errors.hpp"
#include "radii/lp.hpp"
#include "radii/radii.hpp"

namespace radii {

HPolytope ball_hull(const VPolytope& k, const Gauge& b, const Scalar& d) {
  if (k.dim() != b.dim()) throw InputError("ball_hull: body and gauge dimensions differ");
  if (d.sign() <= 0) throw InputError("ball_hull: radius must be positive");
  std::vector<Halfspace> hs;
  for (const auto& h : b.facets().halfspaces()) {
    hs.push_back({h.normal, d * h.offset - support_value(k, -h.normal)});
  }
  return HPolytope(k.dim(), std::move(hs));
}

bool is_complete(const VPolytope& k, const Gauge& b) {
  const Scalar d = diameter(k, b).value;
  if (d.is_zero()) throw InputError("is_complete: body is a single point");
  return polytope_equal(k, ball_hull(k, b, d));
}

bool is_constant_width(const VPolytope& k, const Gauge& b) {
  if (k.dim() != b.dim()) throw InputError("is_constant_width: body and gauge dimensions differ");
  if (!k.full_dimensional()) throw InputError("is_constant_width requires a full-dimensional body");
  const Scalar d = diameter(k, b).value;
  const bool equal = polytope_equal(difference_body(k).body(), scale_translate(b.body(), d, Vector(k.dim())));
  if (equal != (width(k, b) == d)) {
    throw std::logic_error("is_constant_width: difference body test disagrees with w = D");
  }
  return equal;
}

VPolytope pseudo_completion(const VPolytope& k, const Gauge& b) {
  const Ball outer = circumradius(k, b);
  const Scalar d = diameter(k, b).value;
  if (d == outer.radius) return k;
  return hull_union(k, scale_translate(b.body(), d - outer.radius, outer.center));
}

namespace {

// Lexicographically smallest vertex of the ball hull outside `current`.
std::optional<Vector> next_vertex(const VPolytope& current, const Gauge& b, const Scalar& d) {
  const VPolytope theta = h_to_v(ball_hull(current, b, d));
  const HPolytope inside = v_to_h(current);
  for (const auto& v : theta.vertices()) {
    if (!contains_point(inside, v)) return v;
  }
  return std::nullopt;
}

}  // namespace

GreedyCompletion greedy_completion(const VPolytope& k, const Gauge& b, size_t max_rounds) {
  if (max_rounds == 0) throw InputError("greedy_completion: max_rounds must be at least 1");
  const Scalar d = diameter(k, b).value;
  if (d.is_zero()) throw InputError("greedy_completion: body is a single point");
  GreedyCompletion out{k, false, 0};
  for (;;) {
    const auto z = next_vertex(out.body, b, d);
    if (!z) {
      out.converged = true;
      return out;
    }
    if (out.rounds == max_rounds) return out;
    out.body = hull_union(out.body, reduce_v(k.dim(), std::vector<Vector>{*z}));
    ++out.rounds;
  }
}

std::optional<Vector> common_center(const VPolytope& k, const Gauge& b) {
  if (!k.full_dimensional()) throw InputError("common_center requires a full-dimensional body");
  const size_t n = k.dim();
  const Scalar big_r = circumradius(k, b).radius;
  const Scalar small_r = inradius(k, b).radius;
  LinearProgram lp{Vector(n), {}, {}};
  // K ⊆ c + R·B: −a·c ≤ Rβ − h(K, a) per facet of B.
  for (const auto& h : b.facets().halfspaces()) {
    lp.inequalities.push_back({-h.normal, big_r * h.offset - support_value(k, h.normal)});
  }
  // c + r·B ⊆ K: a·c ≤ β − r·h(B, a) per facet of K.
  const HPolytope hk = v_to_h(k);
  for (const auto& h : hk.halfspaces()) {
    lp.inequalities.push_back({h.normal, h.offset - small_r * support_value(b.body(), h.normal)});
  }
  LPResult r = lp_solve(lp);
  if (!r.optimal()) return std::nullopt;
  return std::move(r.point);
}

CompletionReport completion_report(const VPolytope& k, const Gauge& b) {
  const Scalar d = diameter(k, b).value;
  if (d.is_zero()) throw InputError("completion_report: body is a single point");
  HPolytope hull = ball_hull(k, b, d);
  const bool complete = polytope_equal(k, hull);
  VPolytope plus = pseudo_completion(k, b);
  CompletionReport rep{complete,
                       k.full_dimensional() && is_constant_width(k, b),
                       std::move(hull),
                       std::move(plus),
                       d,
                       circumradius(k, b).radius,
                       inradius(k, b).radius,
                       0, 0, 0};
  rep.D_plus = diameter(rep.pseudo_completion, b).value;
  rep.R_plus = circumradius(rep.pseudo_completion, b).radius;
  rep.r_plus = inradius(rep.pseudo_completion, b).radius;

  if (!contains_polytope(rep.ball_hull, k)) {
    throw std::logic_error("completion_report: body not inside its ball hull");
  }
  if (rep.constant_width && !rep.complete) {
    throw std::logic_error("completion_report: constant width body reported incomplete");
  }
  if (rep.D_plus != rep.D || rep.R_plus != rep.R || rep.r_plus != rep.D - rep.R) {
    throw std::logic_error("completion_report: pseudo-completion radii violate D+ = D, R+ = R, r+ = D - R");
  }
  return rep;
}

}  // namespace radii
