#include "radii/harness/shapes.hpp"

#include <cmath>
#include <numbers>

#include "radii/errors.hpp"

namespace radii::harness {

VPolytope cube(size_t n) {
  std::vector<Vector> pts;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    Vector v(n);
    for (size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
    pts.push_back(std::move(v));
  }
  return reduce_v(n, pts);
}

VPolytope crosspolytope(size_t n) {
  std::vector<Vector> pts;
  for (size_t i = 0; i < n; ++i) {
    pts.push_back(Vector::unit(n, i));
    pts.push_back(-Vector::unit(n, i));
  }
  return reduce_v(n, pts);
}

VPolytope standard_simplex(size_t n) {
  std::vector<Vector> pts{Vector(n)};
  for (size_t i = 0; i < n; ++i) pts.push_back(Vector::unit(n, i));
  return reduce_v(n, pts);
}

VPolytope tetrahedron_t3() {
  const Scalar t(1, 3);
  const std::vector<Vector> pts{{t, t, t}, {-t, -t, t}, {t, -t, -t}, {-t, t, -t}};
  return reduce_v(3, pts);
}

std::vector<Vector> regular_simplex_points(size_t n) {
  std::vector<Vector> pts;
  for (size_t i = 0; i <= n; ++i) pts.push_back(Vector::unit(n + 1, i));
  return pts;
}

VPolytope prism(const VPolytope& p, const Scalar& lo, const Scalar& hi) {
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) {
    std::vector<Scalar> c(v.begin(), v.end());
    c.push_back(lo);
    pts.emplace_back(c);
    c.back() = hi;
    pts.emplace_back(std::move(c));
  }
  return reduce_v(p.dim() + 1, pts);
}

namespace {

Vector grid_point(double x, double y, unsigned bits) {
  return Vector{Scalar::round_to(x, bits), Scalar::round_to(y, bits)};
}

}  // namespace

VPolytope reuleaux_polygon(size_t m, size_t per_arc, unsigned bits) {
  if (m < 3 || m % 2 == 0) throw InputError("reuleaux_polygon: m must be odd and at least 3");
  const double step = 2 * std::numbers::pi / static_cast<double>(m);
  std::vector<Vector> pts;
  for (size_t k = 0; k < m; ++k) {
    const double a0 = step * static_cast<double>(k);
    const double a1 = step * static_cast<double>(k + 1);
    const double ac = step * static_cast<double>(k + (m + 1) / 2);
    const double cx = std::cos(ac), cy = std::sin(ac);
    pts.push_back(grid_point(std::cos(a0), std::sin(a0), bits));
    // Angles of the arc endpoints as seen from the opposite corner.
    const double t0 = std::atan2(std::sin(a0) - cy, std::cos(a0) - cx);
    double t1 = std::atan2(std::sin(a1) - cy, std::cos(a1) - cx);
    if (t1 < t0) t1 += 2 * std::numbers::pi;
    const double radius = std::hypot(std::cos(a0) - cx, std::sin(a0) - cy);
    for (size_t j = 1; j <= per_arc; ++j) {
      const double t = t0 + (t1 - t0) * static_cast<double>(j) / static_cast<double>(per_arc + 1);
      pts.push_back(grid_point(cx + radius * std::cos(t), cy + radius * std::sin(t), bits));
    }
  }
  return reduce_v(2, pts);
}

VPolytope regular_polygon(size_t n, unsigned bits) {
  if (n < 3) throw InputError("regular_polygon: need at least 3 vertices");
  std::vector<Vector> pts;
  for (size_t k = 0; k < n; ++k) {
    const double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    pts.push_back(grid_point(std::cos(a), std::sin(a), bits));
  }
  return reduce_v(2, pts);
}

Gauge hexagonal_prism() {
  return Gauge(prism(difference_body(standard_simplex(2)).body(), -1, 1));
}

}  // namespace radii::harness
