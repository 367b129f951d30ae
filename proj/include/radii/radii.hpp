#pragma once

#include <span>
#include <utility>
#include <vector>

#include "radii/polytope.hpp"

namespace radii {

/// center + radius·B.
struct Ball {
  Scalar radius;
  Vector center;
};

struct DiameterResult {
  Scalar value;
  Vector from, to;  // an achieving vertex pair
};

struct RadiiReport {
  Scalar R, r, D, w;
  Vector circumcenter, incenter;
  std::pair<Vector, Vector> diameter_pair;
  Scalar width_certificate;  // λ with λB ⊆ K − K
};

/// Euclidean ball stored by squared radius so that it stays rational.
struct SquaredBall {
  Vector center;
  Scalar radius_squared;
  std::vector<Vector> support;  // input points exactly on the sphere
};

/// Smallest ρ with K ⊆ c + ρB. The center is the lexicographically smallest
/// optimal one.
Ball circumradius(const VPolytope& k, const Gauge& b);

/// The radius only; one LP, no center selection.
Scalar circumradius_value(std::span<const Vector> points, const Gauge& b);

/// Largest ρ with c + ρB ⊆ K. For lower-dimensional K the radius is taken in
/// the affine hull of K with respect to the section of B by that hull.
Ball inradius(const VPolytope& k, const Gauge& b);

DiameterResult diameter(const VPolytope& k, const Gauge& b);

/// max{λ : λB ⊆ K − K}. Requires full-dimensional K.
Scalar width(const VPolytope& k, const Gauge& b);

/// Subsets examined by core_radius are capped by this budget.
inline constexpr size_t kCoreRadiusBudget = 1000000;

/// Largest circumradius of a vertex subset with at most kdim + 1 elements.
/// Only subsets of exactly min(kdim + 1, #vertices) vertices are examined,
/// since the circumradius is monotone under inclusion.
Scalar core_radius(const VPolytope& k, const Gauge& b, size_t kdim);

/// Exact minimum enclosing Euclidean ball of a nonempty point set.
/// Deterministic recursive boundary-set method over the input order.
SquaredBall euclidean_meb(std::span<const Vector> points);

/// All four radii of a full-dimensional K with their witnesses. The
/// containments K ⊆ c_R + R·B and c_r + r·B ⊆ K and the chain
/// 2r ≤ w ≤ r + R ≤ D ≤ 2R are checked before returning.
RadiiReport radii_report(const VPolytope& k, const Gauge& b);

/// H-form of c + ρB.
HPolytope scaled_gauge(const Gauge& b, const Scalar& rho, const Vector& c);

}  // namespace radii
