#pragma once

#include "radii/polytope.hpp"

namespace radii::harness {

/// [-1,1]^n.
VPolytope cube(size_t n);
/// conv{±e_i}.
VPolytope crosspolytope(size_t n);
/// conv{0, e_1, ..., e_n}.
VPolytope standard_simplex(size_t n);
/// The regular 3-simplex inscribed in the unit crosspolytope, with vertices
/// (1,1,1)/3, (-1,-1,1)/3, (1,-1,-1)/3, (-1,1,-1)/3.
VPolytope tetrahedron_t3();
/// conv{e_1, ..., e_{n+1}} in Q^{n+1}: a regular n-simplex with edge √2.
std::vector<Vector> regular_simplex_points(size_t n);

/// Cartesian product p × [lo, hi] in one dimension higher.
VPolytope prism(const VPolytope& p, const Scalar& lo, const Scalar& hi);

/// Polygon inscribed in the Reuleaux m-gon (m odd, ≥ 3) over the regular
/// m-gon with circumradius 1: the m corners plus `per_arc` equally spaced
/// interior points on every arc, each rounded to the 2^-bits grid.
VPolytope reuleaux_polygon(size_t m, size_t per_arc, unsigned bits = 20);

/// Regular N-gon with circumradius 1, vertices rounded to the 2^-bits grid.
VPolytope regular_polygon(size_t n, unsigned bits = 20);

/// (S² − S²) × [−1, 1] with S² = standard_simplex(2).
Gauge hexagonal_prism();

}  // namespace radii::harness
