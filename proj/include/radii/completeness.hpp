#pragma once

#include <optional>

#include "radii/polytope.hpp"

namespace radii {

/// ∩ over vertices v of k of (v + d·b): one halfspace per facet of b,
/// a·z ≤ dβ + min_v a·v. Not reduced.
HPolytope ball_hull(const VPolytope& k, const Gauge& b, const Scalar& d);

/// k equals its ball hull at its own diameter.
bool is_complete(const VPolytope& k, const Gauge& b);

/// K − K = D(K)·B. Also checks that this agrees with w(K) = D(K).
bool is_constant_width(const VPolytope& k, const Gauge& b);

/// conv(K ∪ (c + (D − R)·B)), c the lexicographically minimal circumcenter.
VPolytope pseudo_completion(const VPolytope& k, const Gauge& b);

struct GreedyCompletion {
  VPolytope body;
  bool converged = false;
  size_t rounds = 0;  // vertices adjoined
};

/// Heuristic: while the ball hull at D(k) of the current body is larger,
/// adjoin its lexicographically smallest vertex outside the current body.
/// Each adjunction keeps the diameter. At most max_rounds adjunctions; the
/// flag reports whether the final body is complete.
GreedyCompletion greedy_completion(const VPolytope& k, const Gauge& b, size_t max_rounds);

/// Some c with c + r·B ⊆ K ⊆ c + R·B, if one exists. Requires
/// full-dimensional K.
std::optional<Vector> common_center(const VPolytope& k, const Gauge& b);

struct CompletionReport {
  bool complete;
  bool constant_width;
  HPolytope ball_hull;
  VPolytope pseudo_completion;
  Scalar D, R, r;
  Scalar D_plus, R_plus, r_plus;  // of the pseudo-completion
};

/// Bundles the tests above. Checks D(K⁺) = D, R(K⁺) = R, r(K⁺) = D − R,
/// K ⊆ ball hull, and constant width ⇒ complete before returning.
CompletionReport completion_report(const VPolytope& k, const Gauge& b);

}  // namespace radii
