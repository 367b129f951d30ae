#pragma once

#include <optional>
#include <vector>

#include "radii/linalg.hpp"

namespace radii {

/// Hard cap on the ambient dimension for vertex/facet enumeration.
/// Defaults to 6; the RADII_LAB_DIM_CAP environment variable overrides it.
size_t dimension_cap();

/// Cap on the number of vertices or facets any conversion may produce.
inline constexpr size_t kMaxElements = 2000;

/// Extreme rays of the pointed cone {y : row·y ≥ 0 for every row}, by the
/// incremental double-description method with the combinatorial adjacency
/// test. Rays come back as primitive integer vectors in sorted order.
/// Returns nullopt when the rows do not span the space (cone not pointed).
std::optional<std::vector<Vector>> extreme_rays(const Matrix& rows, size_t dim);

}  // namespace radii
