#pragma once

#include <compare>
#include <span>
#include <vector>

#include "radii/linalg.hpp"
#include "radii/scalar.hpp"
#include "radii/vector.hpp"

namespace radii {

/// normal·x ≤ offset.
struct Halfspace {
  Vector normal;
  Scalar offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend std::strong_ordering operator<=>(const Halfspace& a, const Halfspace& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

/// Positive rescaling to coprime integers, so equal halfspaces compare equal.
Halfspace canonical(const Halfspace& h);

/// Convex hull of finitely many points, always held in canonical form: the
/// vertex list is irredundant and lexicographically sorted. Two VPolytopes
/// describe the same set iff their vertex lists are equal.
class VPolytope {
 public:
  size_t dim() const { return dim_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  size_t size() const { return vertices_.size(); }

  /// Dimension of the affine hull.
  size_t affine_dim() const;
  bool full_dimensional() const { return affine_dim() == dim_; }
  AffineHull hull() const { return affine_hull(vertices_); }

  friend bool operator==(const VPolytope&, const VPolytope&) = default;

 private:
  friend VPolytope reduce_v(size_t dim, std::span<const Vector> points);
  friend VPolytope scale_translate(const VPolytope& p, const Scalar& rho, const Vector& t);
  VPolytope(size_t dim, std::vector<Vector> sorted_vertices)
      : dim_(dim), vertices_(std::move(sorted_vertices)) {}

  size_t dim_ = 0;
  std::vector<Vector> vertices_;
};

/// Intersection of halfspaces. Construction only checks dimensions;
/// boundedness is established by h_to_v (which rejects unbounded input) or
/// bounded().
class HPolytope {
 public:
  HPolytope(size_t dim, std::vector<Halfspace> halfspaces);

  size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return hs_; }
  size_t size() const { return hs_.size(); }

  /// Every coordinate direction bounded above and below (LP).
  bool bounded() const;

 private:
  size_t dim_;
  std::vector<Halfspace> hs_;
};

/// Symmetric, full-dimensional polytope with the origin in its interior;
/// the unit ball of a polytopal norm. Validated at construction.
class Gauge {
 public:
  /// Throws ValidationError naming the violated invariant.
  explicit Gauge(VPolytope body);

  size_t dim() const { return body_.dim(); }
  const VPolytope& body() const { return body_; }
  const HPolytope& facets() const { return facets_; }

  friend bool operator==(const Gauge& a, const Gauge& b) { return a.body_ == b.body_; }

 private:
  VPolytope body_;
  HPolytope facets_;
};

// --- representation conversion -------------------------------------------

/// Canonical hull of a nonempty point set.
VPolytope reduce_v(size_t dim, std::span<const Vector> points);

/// Facets of p. For lower-dimensional p the result is the facets within the
/// affine hull plus each affine equation as a pair of opposite halfspaces.
HPolytope v_to_h(const VPolytope& p);

/// Vertices of a bounded, nonempty H-polytope. Throws InputError otherwise.
VPolytope h_to_v(const HPolytope& p);

/// Drops halfspaces implied by the others (one LP per halfspace) and
/// exact duplicates after canonical scaling.
HPolytope reduce_h(const HPolytope& p);

// --- constructions ---------------------------------------------------------

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

/// p + (-p) as a gauge. Throws InputError when p is lower-dimensional.
Gauge difference_body(const VPolytope& p);

VPolytope hull_union(const VPolytope& p, const VPolytope& q);

/// {rho·v + t : v ∈ p}; rho may be zero or negative.
VPolytope scale_translate(const VPolytope& p, const Scalar& rho, const Vector& t);

inline VPolytope negate(const VPolytope& p) { return scale_translate(p, -1, Vector(p.dim())); }

/// Chart restriction: p expressed in local coordinates of `chart` (every
/// vertex must lie in the chart's affine hull), and the inverse lift.
VPolytope to_local(const VPolytope& p, const AffineHull& chart);
VPolytope from_local(const VPolytope& p, const AffineHull& chart);

/// Section of a gauge by the direction space of `chart`, as a gauge in the
/// chart's local coordinates.
Gauge section(const Gauge& b, const AffineHull& chart);

// --- functionals -----------------------------------------------------------

/// h(p, u) = max over vertices of u·v.
Scalar support_value(const VPolytope& p, const Vector& u);

/// min{t ≥ 0 : x ∈ t·B}.
Scalar gauge_norm(const Gauge& b, const Vector& x);

// --- predicates ------------------------------------------------------------

bool contains_point(const HPolytope& p, const Vector& x);
/// Membership LP over convex combinations of the vertices.
bool contains_point(const VPolytope& p, const Vector& x);

bool contains_polytope(const HPolytope& outer, const VPolytope& inner);
bool contains_polytope(const VPolytope& outer, const VPolytope& inner);
bool contains_polytope(const HPolytope& outer, const HPolytope& inner);

/// Exact set equality. For two VPolytopes this is canonical-form equality,
/// which coincides with mutual containment.
bool polytope_equal(const VPolytope& p, const VPolytope& q);
bool polytope_equal(const VPolytope& p, const HPolytope& q);
bool polytope_equal(const HPolytope& p, const HPolytope& q);

/// True iff x is a convex combination of `points` (LP).
bool in_convex_hull(std::span<const Vector> points, const Vector& x);

}  // namespace radii
