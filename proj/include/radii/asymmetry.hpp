#pragma once

#include "radii/polytope.hpp"

namespace radii {

struct AsymmetryResult {
  Scalar s;
  /// c with −K ⊆ c + s·K; lexicographically minimal among optimal ones.
  Vector translation;
  /// The point x with −(K − x) ⊆ s·(K − x), namely −c/(1 + s).
  Vector center;
  /// K − center.
  VPolytope centered_body;
};

struct SandwichCertificate {
  Scalar inner_factor;  // 1/(1+s)
  Scalar outer_factor;  // s/(1+s)
  /// inner·(K−K) ⊆ K − x and K − x ⊆ outer·(K−K), x the Minkowski center.
  bool inner_verified = false;
  bool outer_verified = false;
};

/// Minkowski asymmetry. Lower-dimensional K is an InputError unless
/// `restrict_to_hull` is set, in which case s is taken inside the affine hull.
AsymmetryResult minkowski_asymmetry(const VPolytope& k, bool restrict_to_hull = false);

/// R(K)/D(K). InputError for a single point.
Scalar jung_ratio(const VPolytope& k, const Gauge& b);

SandwichCertificate bm_sandwich(const VPolytope& k);

/// Whether −K ⊆ s(K)·K.
bool is_minkowski_centered(const VPolytope& k);

}  // namespace radii
