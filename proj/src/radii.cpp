#include "radii/radii.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "radii/errors.hpp"
#include "radii/lp.hpp"

namespace radii {

namespace {

// max over points of a·p.
Scalar support_of(std::span<const Vector> points, const Vector& a) {
  Scalar best = dot(a, points.front());
  for (const auto& p : points) best = max(best, dot(a, p));
  return best;
}

// Variables (ρ, c). maximize −ρ s.t. −β ρ − a·c ≤ −h(K, a) per facet of B.
LinearProgram circumradius_lp(std::span<const Vector> points, const Gauge& b) {
  const size_t n = b.dim();
  LinearProgram lp{prepend(-1, Vector(n)), {}, {}};
  for (const auto& h : b.facets().halfspaces()) {
    lp.inequalities.push_back({prepend(-h.offset, -h.normal), -support_of(points, h.normal)});
  }
  return lp;
}

Vector tail(const Vector& v) { return Vector(std::vector<Scalar>(v.begin() + 1, v.end())); }

Ball inradius_full(const VPolytope& k, const Gauge& b) {
  const size_t n = k.dim();
  LinearProgram lp{prepend(1, Vector(n)), {}, {}};
  const HPolytope hk = v_to_h(k);
  for (const auto& h : hk.halfspaces()) {
    lp.inequalities.push_back({prepend(support_value(b.body(), h.normal), h.normal), h.offset});
  }
  const LPResult r = lp_lex_optimal(lp);
  if (!r.optimal()) throw std::logic_error("inradius LP not optimal");
  return Ball{(*r.point)[0], tail(*r.point)};
}

}  // namespace

HPolytope scaled_gauge(const Gauge& b, const Scalar& rho, const Vector& c) {
  std::vector<Halfspace> hs;
  for (const auto& h : b.facets().halfspaces()) {
    hs.push_back({h.normal, rho * h.offset + dot(h.normal, c)});
  }
  return HPolytope(b.dim(), std::move(hs));
}

Ball circumradius(const VPolytope& k, const Gauge& b) {
  if (k.dim() != b.dim()) throw InputError("circumradius: body and gauge dimensions differ");
  const LPResult r = lp_lex_optimal(circumradius_lp(k.vertices(), b));
  if (!r.optimal()) throw std::logic_error("circumradius LP not optimal");
  return Ball{(*r.point)[0], tail(*r.point)};
}

Scalar circumradius_value(std::span<const Vector> points, const Gauge& b) {
  if (points.empty()) throw InputError("circumradius of an empty set");
  const LPResult r = lp_solve(circumradius_lp(points, b));
  if (!r.optimal()) throw std::logic_error("circumradius LP not optimal");
  return -*r.value;
}

Ball inradius(const VPolytope& k, const Gauge& b) {
  if (k.dim() != b.dim()) throw InputError("inradius: body and gauge dimensions differ");
  if (k.full_dimensional()) return inradius_full(k, b);
  const AffineHull chart = k.hull();
  if (chart.dim() == 0) return Ball{0, k.vertices().front()};
  const Ball local = inradius_full(to_local(k, chart), section(b, chart));
  return Ball{local.radius, chart.from_local(local.center)};
}

DiameterResult diameter(const VPolytope& k, const Gauge& b) {
  if (k.dim() != b.dim()) throw InputError("diameter: body and gauge dimensions differ");
  const auto& vs = k.vertices();
  DiameterResult best{0, vs.front(), vs.front()};
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      Scalar d = gauge_norm(b, vs[j] - vs[i]);
      if (d > best.value) best = DiameterResult{std::move(d), vs[i], vs[j]};
    }
  }
  return best;
}

Scalar width(const VPolytope& k, const Gauge& b) {
  if (k.dim() != b.dim()) throw InputError("width: body and gauge dimensions differ");
  if (!k.full_dimensional()) throw InputError("width requires a full-dimensional body");
  const Gauge diff = difference_body(k);
  LinearProgram lp{Vector{1}, {}, {}};
  for (const auto& h : diff.facets().halfspaces()) {
    lp.inequalities.push_back({Vector{support_value(b.body(), h.normal)}, h.offset});
  }
  const LPResult r = lp_solve(lp);
  if (!r.optimal()) throw std::logic_error("width LP not optimal");
  return *r.value;
}

Scalar core_radius(const VPolytope& k, const Gauge& b, size_t kdim) {
  if (k.dim() != b.dim()) throw InputError("core_radius: body and gauge dimensions differ");
  if (kdim == 0 || kdim > k.dim()) {
    throw InputError("core_radius: kdim must be in 1.." + std::to_string(k.dim()));
  }
  const auto& vs = k.vertices();
  const size_t m = vs.size();
  const size_t s = std::min(m, kdim + 1);

  // C(m, s) with early exit once over budget.
  size_t count = 1;
  for (size_t i = 0; i < s; ++i) {
    count = count * (m - i) / (i + 1);
    if (count > kCoreRadiusBudget) {
      throw CapabilityError("core_radius: more than " + std::to_string(kCoreRadiusBudget) +
                            " vertex subsets");
    }
  }

  Scalar best = 0;
  std::vector<size_t> idx(s);
  for (size_t i = 0; i < s; ++i) idx[i] = i;
  std::vector<Vector> subset(s);
  for (;;) {
    for (size_t i = 0; i < s; ++i) subset[i] = vs[idx[i]];
    best = max(best, circumradius_value(subset, b));
    size_t i = s;
    while (i > 0 && idx[i - 1] == m - s + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

namespace {

struct Sphere {
  bool valid = false;
  Vector center;
  Scalar r2;

  bool contains(const Vector& p) const {
    if (!valid) return false;
    const Vector d = p - center;
    return dot(d, d) <= r2;
  }
};

// Smallest sphere through every point of `boundary`, centered in its affine
// hull. Invalid if the points are not cospherical.
Sphere sphere_through(const std::vector<Vector>& boundary, size_t dim) {
  if (boundary.empty()) return Sphere{false, Vector(dim), -1};
  const Vector& p0 = boundary.front();
  Matrix independent;
  for (size_t i = 1; i < boundary.size(); ++i) {
    Matrix trial = independent;
    trial.push_back(boundary[i] - p0);
    if (rank(trial, dim) == trial.size()) independent = std::move(trial);
  }
  const size_t k = independent.size();
  Vector center = p0;
  if (k > 0) {
    Matrix g(k, Vector(k));
    Vector rhs(k);
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) g[i][j] = dot(independent[i], independent[j]);
      rhs[i] = dot(independent[i], independent[i]) / 2;
    }
    const auto lambda = solve(g, rhs);
    if (!lambda) throw std::logic_error("euclidean_meb: singular Gram system");
    for (size_t j = 0; j < k; ++j) center += independent[j] * (*lambda)[j];
  }
  const Vector d0 = p0 - center;
  Sphere s{true, center, dot(d0, d0)};
  for (const auto& p : boundary) {
    const Vector d = p - center;
    if (dot(d, d) != s.r2) return Sphere{false, Vector(dim), -1};
  }
  return s;
}

Sphere welzl(std::span<const Vector> pts, size_t count, std::vector<Vector>& boundary, size_t dim) {
  if (count == 0 || boundary.size() == dim + 1) return sphere_through(boundary, dim);
  const Vector& p = pts[count - 1];
  Sphere s = welzl(pts, count - 1, boundary, dim);
  if (s.contains(p)) return s;
  boundary.push_back(p);
  s = welzl(pts, count - 1, boundary, dim);
  boundary.pop_back();
  return s;
}

}  // namespace

SquaredBall euclidean_meb(std::span<const Vector> points) {
  if (points.empty()) throw InputError("euclidean_meb of an empty point set");
  const size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("euclidean_meb: points of mixed dimension");
  }
  std::vector<Vector> boundary;
  const Sphere s = welzl(points, points.size(), boundary, dim);
  if (!s.valid) throw std::logic_error("euclidean_meb: no enclosing sphere found");
  SquaredBall out{s.center, s.r2, {}};
  for (const auto& p : points) {
    const Vector d = p - s.center;
    const Scalar q = dot(d, d);
    if (q > s.r2) throw std::logic_error("euclidean_meb: point outside the computed ball");
    if (q == s.r2) out.support.push_back(p);
  }
  std::sort(out.support.begin(), out.support.end());
  out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
  return out;
}

RadiiReport radii_report(const VPolytope& k, const Gauge& b) {
  if (!k.full_dimensional()) throw InputError("radii_report requires a full-dimensional body");
  const Ball outer = circumradius(k, b);
  const Ball inner = inradius(k, b);
  DiameterResult d = diameter(k, b);
  const Scalar w = width(k, b);

  if (!contains_polytope(scaled_gauge(b, outer.radius, outer.center), k)) {
    throw std::logic_error("radii_report: circumball does not contain the body");
  }
  if (!contains_polytope(v_to_h(k), scale_translate(b.body(), inner.radius, inner.center))) {
    throw std::logic_error("radii_report: inball is not contained in the body");
  }
  if (!(2 * inner.radius <= w && w <= inner.radius + outer.radius &&
        inner.radius + outer.radius <= d.value && d.value <= 2 * outer.radius)) {
    throw std::logic_error("radii_report: 2r <= w <= r+R <= D <= 2R violated");
  }
  return RadiiReport{outer.radius, inner.radius, d.value, w, outer.center, inner.center,
                     {std::move(d.from), std::move(d.to)}, w};
}

}  // namespace radii
