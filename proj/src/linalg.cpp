#include "radii/linalg.hpp"

#include "radii/errors.hpp"

namespace radii {

RowEchelon rref(Matrix rows, size_t cols) {
  RowEchelon out;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = rows[r][c].inverse();
    rows[r] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

size_t rank(const Matrix& rows, size_t cols) { return rref(rows, cols).pivots.size(); }

std::optional<Vector> solve(Matrix a, Vector b) {
  const size_t n = a.size();
  if (b.size() != n) throw InputError("solve: right-hand side has wrong length");
  Matrix aug(n);
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InputError("solve: matrix is not square");
    std::vector<Scalar> row(a[i].begin(), a[i].end());
    row.push_back(b[i]);
    aug[i] = Vector(std::move(row));
  }
  const RowEchelon e = rref(std::move(aug), n);
  if (e.pivots.size() < n) return std::nullopt;
  Vector x(n);
  for (size_t i = 0; i < n; ++i) x[e.pivots[i]] = e.rows[i][n];
  return x;
}

Matrix nullspace(const Matrix& rows, size_t cols) {
  const RowEchelon e = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector AffineHull::to_local(const Vector& x) const { return direction_to_local(x - origin); }

Vector AffineHull::from_local(const Vector& y) const { return origin + direction_from_local(y); }

Vector AffineHull::direction_to_local(const Vector& d) const {
  Vector y(pivots.size());
  for (size_t j = 0; j < pivots.size(); ++j) y[j] = d[pivots[j]];
  return y;
}

Vector AffineHull::direction_from_local(const Vector& y) const {
  Vector d(ambient());
  for (size_t j = 0; j < basis.size(); ++j) d += basis[j] * y[j];
  return d;
}

bool AffineHull::contains(const Vector& x) const {
  const Vector d = x - origin;
  for (const auto& nrm : normals) {
    if (!dot(nrm, d).is_zero()) return false;
  }
  return true;
}

AffineHull affine_hull(std::span<const Vector> points) {
  if (points.empty()) throw InputError("affine hull of an empty point set");
  AffineHull h;
  h.origin = points.front();
  const size_t n = h.origin.size();
  Matrix diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - h.origin);
  RowEchelon e = rref(std::move(diffs), n);
  h.basis = std::move(e.rows);
  h.pivots = std::move(e.pivots);
  h.normals = nullspace(h.basis, n);
  return h;
}

}  // namespace radii
