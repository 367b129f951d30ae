#include "radii/asymmetry.hpp"

#include <stdexcept>

#include "radii/errors.hpp"
#include "radii/lp.hpp"
#include "radii/radii.hpp"

namespace radii {

namespace {

// Variables (ρ, c). min ρ s.t. −β ρ − a·c ≤ min_v a·v per facet of K, ρ ≥ 0.
// Without ρ ≥ 0 the program is unbounded through ρ ≤ −1.
AsymmetryResult asymmetry_full(const VPolytope& k) {
  const size_t n = k.dim();
  LinearProgram lp{prepend(-1, Vector(n)), {}, {}};
  lp.inequalities.push_back({-Vector::unit(n + 1, 0), 0});
  const HPolytope hk = v_to_h(k);
  for (const auto& h : hk.halfspaces()) {
    lp.inequalities.push_back({prepend(-h.offset, -h.normal), -support_value(k, -h.normal)});
  }
  const LPResult r = lp_lex_optimal(lp);
  if (!r.optimal()) throw std::logic_error("asymmetry LP not optimal");
  const Scalar s = (*r.point)[0];
  Vector c(n);
  for (size_t i = 0; i < n; ++i) c[i] = (*r.point)[i + 1];
  Vector x = c * (-(Scalar(1) / (1 + s)));
  return AsymmetryResult{s, c, x, scale_translate(k, 1, -x)};
}

}  // namespace

AsymmetryResult minkowski_asymmetry(const VPolytope& k, bool restrict_to_hull) {
  if (k.full_dimensional()) return asymmetry_full(k);
  if (!restrict_to_hull) {
    throw InputError("minkowski_asymmetry: body is not full-dimensional");
  }
  const AffineHull chart = k.hull();
  if (chart.dim() == 0) {
    throw InputError("minkowski_asymmetry: body is a single point");
  }
  const AsymmetryResult local = asymmetry_full(to_local(k, chart));
  const Vector x = chart.from_local(local.center);
  return AsymmetryResult{local.s, x * (-(1 + local.s)), x, scale_translate(k, 1, -x)};
}

Scalar jung_ratio(const VPolytope& k, const Gauge& b) {
  const Scalar d = diameter(k, b).value;
  if (d.is_zero()) throw InputError("jung_ratio: body is a single point");
  return circumradius(k, b).radius / d;
}

SandwichCertificate bm_sandwich(const VPolytope& k) {
  const AsymmetryResult a = minkowski_asymmetry(k);
  const Gauge diff = difference_body(k);
  SandwichCertificate cert{Scalar(1) / (1 + a.s), a.s / (1 + a.s)};
  const Vector origin(k.dim());
  cert.inner_verified = contains_polytope(v_to_h(a.centered_body),
                                          scale_translate(diff.body(), cert.inner_factor, origin));
  cert.outer_verified =
      contains_polytope(scaled_gauge(diff, cert.outer_factor, origin), a.centered_body);
  return cert;
}

bool is_minkowski_centered(const VPolytope& k) {
  const Scalar s = minkowski_asymmetry(k).s;
  const HPolytope hk = v_to_h(k);
  std::vector<Halfspace> scaled;
  for (const auto& h : hk.halfspaces()) scaled.push_back({h.normal, s * h.offset});
  return contains_polytope(HPolytope(k.dim(), std::move(scaled)), negate(k));
}

}  // namespace radii
