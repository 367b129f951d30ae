#pragma once

#include <optional>
#include <span>
#include <vector>

#include "radii/vector.hpp"

namespace radii {

using Matrix = std::vector<Vector>;  // row-major

struct RowEchelon {
  Matrix rows;                // nonzero rows of the reduced row echelon form
  std::vector<size_t> pivots; // pivot column of each row
};

RowEchelon rref(Matrix rows, size_t cols);
size_t rank(const Matrix& rows, size_t cols);

/// Unique solution of the square system A x = b, or nullopt when singular.
std::optional<Vector> solve(Matrix a, Vector b);

/// Basis of {x : r·x = 0 for all rows r}.
Matrix nullspace(const Matrix& rows, size_t cols);

/// Affine hull of a finite point set, with an exact rational chart.
///
/// `basis[j]` has a 1 in column `pivots[j]` and zeros in the other pivot
/// columns, so local coordinates of a point x in the hull are simply the
/// pivot coordinates of x - origin.
struct AffineHull {
  Vector origin;
  Matrix basis;
  std::vector<size_t> pivots;
  Matrix normals;  // spans the orthogonal complement of the direction space

  size_t dim() const { return basis.size(); }
  size_t ambient() const { return origin.size(); }
  bool full() const { return dim() == ambient(); }

  Vector to_local(const Vector& x) const;
  Vector from_local(const Vector& y) const;
  /// Linear part only: direction vector in local coordinates.
  Vector direction_to_local(const Vector& d) const;
  Vector direction_from_local(const Vector& y) const;
  bool contains(const Vector& x) const;
};

AffineHull affine_hull(std::span<const Vector> points);

}  // namespace radii
