#include "radii/polytope.hpp"

#include <algorithm>
#include <string>

#include "radii/dual_description.hpp"
#include "radii/errors.hpp"
#include "radii/lp.hpp"

namespace radii {

namespace {

void require_dim(size_t a, size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

void require_cap(size_t dim) {
  if (dim > dimension_cap()) {
    throw CapabilityError("dimension " + std::to_string(dim) + " exceeds the cap of " +
                          std::to_string(dimension_cap()));
  }
}

void require_count(size_t count, const char* what) {
  if (count > kMaxElements) {
    throw CapabilityError(std::string(what) + " count " + std::to_string(count) +
                          " exceeds the cap of " + std::to_string(kMaxElements));
  }
}

std::vector<Vector> sorted_unique(std::vector<Vector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Facets of a full-dimensional point set in Q^n, n ≥ 2.
std::vector<Halfspace> facets_full(size_t n, const std::vector<Vector>& pts) {
  Matrix rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) rows.push_back(prepend(1, p));
  const auto rays = extreme_rays(rows, n + 1);
  if (!rays) throw std::logic_error("facets_full: point set is not full-dimensional");
  std::vector<Halfspace> hs;
  hs.reserve(rays->size());
  for (const auto& y : *rays) {
    Vector a(n);
    for (size_t k = 0; k < n; ++k) a[k] = -y[k + 1];
    hs.push_back(canonical(Halfspace{std::move(a), y[0]}));
  }
  require_count(hs.size(), "facet");
  std::sort(hs.begin(), hs.end());
  return hs;
}

Scalar cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Strictly convex hull of sorted, distinct planar points (monotone chain).
std::vector<Vector> planar_hull(const std::vector<Vector>& pts) {
  std::vector<Vector> h;
  h.reserve(2 * pts.size());
  for (const auto& p : pts) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p).sign() <= 0) h.pop_back();
    h.push_back(p);
  }
  const size_t lower = h.size() + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (h.size() >= lower && cross(h[h.size() - 2], h.back(), pts[i]).sign() <= 0) h.pop_back();
    h.push_back(pts[i]);
  }
  h.pop_back();
  return h;
}

// Extreme points of a full-dimensional, deduplicated point set in Q^n.
std::vector<Vector> extreme_points_full(size_t n, const std::vector<Vector>& pts) {
  if (n == 1) return {pts.front(), pts.back()};
  if (n == 2) return sorted_unique(planar_hull(pts));
  const auto hs = facets_full(n, pts);
  std::vector<Vector> out;
  for (const auto& p : pts) {
    Matrix tight;
    for (const auto& h : hs) {
      if (dot(h.normal, p) == h.offset) tight.push_back(h.normal);
    }
    if (tight.size() >= n && rank(tight, n) == n) out.push_back(p);
  }
  return out;
}

}  // namespace

Halfspace canonical(const Halfspace& h) {
  const Vector p = primitive_integer(prepend(h.offset, h.normal));
  Vector a(h.normal.size());
  for (size_t k = 0; k < a.size(); ++k) a[k] = p[k + 1];
  return Halfspace{std::move(a), p[0]};
}

size_t VPolytope::affine_dim() const { return affine_hull(vertices_).dim(); }

HPolytope::HPolytope(size_t dim, std::vector<Halfspace> halfspaces)
    : dim_(dim), hs_(std::move(halfspaces)) {
  for (const auto& h : hs_) require_dim(h.normal.size(), dim_, "HPolytope");
}

bool HPolytope::bounded() const {
  LinearProgram lp{Vector(dim_), {}, {}};
  for (const auto& h : hs_) lp.inequalities.push_back({h.normal, h.offset});
  for (size_t i = 0; i < dim_; ++i) {
    for (int s : {1, -1}) {
      lp.objective = Vector::unit(dim_, i) * Scalar(s);
      if (lp_solve(lp).status == LPStatus::unbounded) return false;
    }
  }
  return true;
}

Gauge::Gauge(VPolytope body) : body_(std::move(body)), facets_(body_.dim(), {}) {
  if (!body_.full_dimensional()) {
    throw ValidationError("gauge is not full-dimensional (affine dimension " +
                          std::to_string(body_.affine_dim()) + " in R^" +
                          std::to_string(body_.dim()) + ")");
  }
  const auto& vs = body_.vertices();
  for (const auto& v : vs) {
    if (!std::binary_search(vs.begin(), vs.end(), -v)) {
      throw ValidationError("gauge is not centrally symmetric: vertex " + v.str() +
                            " has no opposite vertex");
    }
  }
  facets_ = v_to_h(body_);
  for (const auto& h : facets_.halfspaces()) {
    if (h.offset.sign() <= 0) throw ValidationError("gauge does not contain the origin in its interior");
  }
}

VPolytope reduce_v(size_t dim, std::span<const Vector> points) {
  if (points.empty()) throw InputError("polytope needs at least one point");
  for (const auto& p : points) require_dim(p.size(), dim, "reduce_v");
  std::vector<Vector> pts = sorted_unique(std::vector<Vector>(points.begin(), points.end()));
  if (pts.size() == 1) return VPolytope(dim, std::move(pts));

  const AffineHull chart = affine_hull(pts);
  if (chart.full()) {
    if (dim > 2) require_cap(dim);
    return VPolytope(dim, extreme_points_full(dim, pts));
  }
  std::vector<Vector> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(chart.to_local(p));
  local = sorted_unique(std::move(local));
  std::vector<Vector> lifted;
  for (const auto& y : extreme_points_full(chart.dim(), local)) lifted.push_back(chart.from_local(y));
  return VPolytope(dim, sorted_unique(std::move(lifted)));
}

HPolytope v_to_h(const VPolytope& p) {
  const size_t n = p.dim();
  require_cap(n);
  const AffineHull chart = p.hull();
  if (chart.full()) {
    if (n == 1) {
      return HPolytope(1, {canonical({Vector{-1}, -p.vertices().front()[0]}),
                           canonical({Vector{1}, p.vertices().back()[0]})});
    }
    return HPolytope(n, facets_full(n, p.vertices()));
  }

  std::vector<Halfspace> hs;
  const size_t k = chart.dim();
  std::vector<Vector> local;
  for (const auto& v : p.vertices()) local.push_back(chart.to_local(v));
  local = sorted_unique(std::move(local));
  std::vector<Halfspace> local_hs;
  if (k == 1) {
    local_hs = {{Vector{-1}, -local.front()[0]}, {Vector{1}, local.back()[0]}};
  } else if (k >= 2) {
    local_hs = facets_full(k, local);
  }
  for (const auto& h : local_hs) {
    Vector a(n);
    for (size_t j = 0; j < k; ++j) a[chart.pivots[j]] = h.normal[j];
    const Scalar off = h.offset + dot(a, chart.origin);
    hs.push_back(canonical({std::move(a), off}));
  }
  for (const auto& nrm : chart.normals) {
    const Scalar c = dot(nrm, chart.origin);
    hs.push_back(canonical({nrm, c}));
    hs.push_back(canonical({-nrm, -c}));
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return HPolytope(n, std::move(hs));
}

VPolytope h_to_v(const HPolytope& p) {
  const size_t n = p.dim();
  require_cap(n);
  Matrix rows;
  rows.reserve(p.size() + 1);
  for (const auto& h : p.halfspaces()) rows.push_back(prepend(h.offset, -h.normal));
  rows.push_back(Vector::unit(n + 1, 0));
  const auto rays = extreme_rays(rows, n + 1);
  if (!rays) throw InputError("H-polytope is unbounded: halfspace normals do not span R^" + std::to_string(n));
  std::vector<Vector> vs;
  for (const auto& y : *rays) {
    if (y[0].is_zero()) throw InputError("H-polytope is unbounded: recession direction " + y.str());
    Vector x(n);
    for (size_t k = 0; k < n; ++k) x[k] = y[k + 1] / y[0];
    vs.push_back(std::move(x));
  }
  if (vs.empty()) throw InputError("H-polytope is empty");
  require_count(vs.size(), "vertex");
  return reduce_v(n, vs);
}

HPolytope reduce_h(const HPolytope& p) {
  std::vector<Halfspace> hs;
  for (const auto& h : p.halfspaces()) hs.push_back(canonical(h));
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  for (size_t i = hs.size(); i-- > 0;) {
    LinearProgram lp{hs[i].normal, {}, {}};
    for (size_t j = 0; j < hs.size(); ++j) {
      if (j != i) lp.inequalities.push_back({hs[j].normal, hs[j].offset});
    }
    const LPResult r = lp_solve(lp);
    if (r.status == LPStatus::infeasible) throw InputError("H-polytope is empty");
    if (r.optimal() && *r.value <= hs[i].offset) hs.erase(hs.begin() + static_cast<long>(i));
  }
  return HPolytope(p.dim(), std::move(hs));
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  require_dim(p.dim(), q.dim(), "minkowski_sum");
  std::vector<Vector> sums;
  sums.reserve(p.size() * q.size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return reduce_v(p.dim(), sums);
}

Gauge difference_body(const VPolytope& p) {
  if (!p.full_dimensional()) throw InputError("difference body requires a full-dimensional polytope");
  return Gauge(minkowski_sum(p, negate(p)));
}

VPolytope hull_union(const VPolytope& p, const VPolytope& q) {
  require_dim(p.dim(), q.dim(), "hull_union");
  std::vector<Vector> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return reduce_v(p.dim(), pts);
}

VPolytope scale_translate(const VPolytope& p, const Scalar& rho, const Vector& t) {
  require_dim(p.dim(), t.size(), "scale_translate");
  if (rho.is_zero()) return VPolytope(p.dim(), {t});
  std::vector<Vector> vs;
  vs.reserve(p.size());
  for (const auto& v : p.vertices()) vs.push_back(v * rho + t);
  std::sort(vs.begin(), vs.end());
  return VPolytope(p.dim(), std::move(vs));
}

VPolytope to_local(const VPolytope& p, const AffineHull& chart) {
  require_dim(p.dim(), chart.ambient(), "to_local");
  std::vector<Vector> local;
  for (const auto& v : p.vertices()) {
    if (!chart.contains(v)) throw InputError("to_local: vertex " + v.str() + " is outside the chart");
    local.push_back(chart.to_local(v));
  }
  return reduce_v(chart.dim(), local);
}

VPolytope from_local(const VPolytope& p, const AffineHull& chart) {
  require_dim(p.dim(), chart.dim(), "from_local");
  std::vector<Vector> pts;
  for (const auto& y : p.vertices()) pts.push_back(chart.from_local(y));
  return reduce_v(chart.ambient(), pts);
}

Gauge section(const Gauge& b, const AffineHull& chart) {
  require_dim(b.dim(), chart.ambient(), "section");
  const size_t k = chart.dim();
  std::vector<Halfspace> hs;
  for (const auto& h : b.facets().halfspaces()) {
    Vector a(k);
    for (size_t j = 0; j < k; ++j) a[j] = dot(h.normal, chart.basis[j]);
    if (a.is_zero()) continue;
    hs.push_back({std::move(a), h.offset});
  }
  return Gauge(h_to_v(HPolytope(k, std::move(hs))));
}

Scalar support_value(const VPolytope& p, const Vector& u) {
  require_dim(p.dim(), u.size(), "support_value");
  Scalar best = dot(u, p.vertices().front());
  for (const auto& v : p.vertices()) best = max(best, dot(u, v));
  return best;
}

Scalar gauge_norm(const Gauge& b, const Vector& x) {
  require_dim(b.dim(), x.size(), "gauge_norm");
  Scalar best = 0;
  for (const auto& h : b.facets().halfspaces()) best = max(best, dot(h.normal, x) / h.offset);
  return best;
}

bool contains_point(const HPolytope& p, const Vector& x) {
  require_dim(p.dim(), x.size(), "contains_point");
  for (const auto& h : p.halfspaces()) {
    if (dot(h.normal, x) > h.offset) return false;
  }
  return true;
}

bool contains_point(const VPolytope& p, const Vector& x) {
  require_dim(p.dim(), x.size(), "contains_point");
  return in_convex_hull(p.vertices(), x);
}

bool in_convex_hull(std::span<const Vector> points, const Vector& x) {
  if (points.empty()) return false;
  const size_t n = x.size();
  for (const auto& p : points) {
    require_dim(p.size(), n, "in_convex_hull");
    if (p == x) return true;
  }
  const size_t m = points.size();
  LinearProgram lp{Vector(m), {}, {}};
  for (size_t i = 0; i < m; ++i) lp.inequalities.push_back({-Vector::unit(m, i), 0});
  Vector ones(m);
  for (size_t i = 0; i < m; ++i) ones[i] = 1;
  lp.equalities.push_back({ones, 1});
  for (size_t k = 0; k < n; ++k) {
    Vector row(m);
    for (size_t i = 0; i < m; ++i) row[i] = points[i][k];
    lp.equalities.push_back({row, x[k]});
  }
  return lp_solve(lp).optimal();
}

bool contains_polytope(const HPolytope& outer, const VPolytope& inner) {
  require_dim(outer.dim(), inner.dim(), "contains_polytope");
  for (const auto& v : inner.vertices()) {
    if (!contains_point(outer, v)) return false;
  }
  return true;
}

bool contains_polytope(const VPolytope& outer, const VPolytope& inner) {
  require_dim(outer.dim(), inner.dim(), "contains_polytope");
  for (const auto& v : inner.vertices()) {
    if (!contains_point(outer, v)) return false;
  }
  return true;
}

bool contains_polytope(const HPolytope& outer, const HPolytope& inner) {
  return contains_polytope(outer, h_to_v(inner));
}

bool polytope_equal(const VPolytope& p, const VPolytope& q) {
  require_dim(p.dim(), q.dim(), "polytope_equal");
  return p.vertices() == q.vertices();
}

bool polytope_equal(const VPolytope& p, const HPolytope& q) { return polytope_equal(p, h_to_v(q)); }

bool polytope_equal(const HPolytope& p, const HPolytope& q) {
  return polytope_equal(h_to_v(p), h_to_v(q));
}

}  // namespace radii
