#include "radii/dual_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "radii/errors.hpp"

namespace radii {

size_t dimension_cap() {
  if (const char* env = std::getenv("RADII_LAB_DIM_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 6;
}

namespace {

// Intermediate ray lists may exceed the output cap before redundant rows cut
// them back down; this bounds the working set.
constexpr size_t kMaxWorkingRays = 20 * kMaxElements;

class Bits {
 public:
  explicit Bits(size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(size_t i) { w_[i / 64] |= uint64_t{1} << (i % 64); }
  size_t count() const {
    size_t c = 0;
    for (auto x : w_) c += static_cast<size_t>(std::popcount(x));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      if ((w_[i] & ~o.w_[i]) != 0) return false;
    }
    return true;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r = a;
    for (size_t i = 0; i < r.w_.size(); ++i) r.w_[i] &= b.w_[i];
    return r;
  }

 private:
  std::vector<uint64_t> w_;
};

struct Ray {
  Vector v;
  Bits zero;
};

}  // namespace

std::optional<std::vector<Vector>> extreme_rays(const Matrix& rows, size_t dim) {
  for (const auto& r : rows) {
    if (r.size() != dim) throw InputError("extreme_rays: row has wrong dimension");
  }
  const size_t m = rows.size();

  // Greedily choose `dim` linearly independent rows for the initial
  // simplicial cone.
  std::vector<size_t> basis_rows;
  {
    Matrix reduced;
    std::vector<size_t> pivot_cols;
    for (size_t i = 0; i < m && basis_rows.size() < dim; ++i) {
      Vector v = rows[i];
      for (size_t k = 0; k < reduced.size(); ++k) {
        const Scalar f = v[pivot_cols[k]];
        if (!f.is_zero()) v -= reduced[k] * f;
      }
      size_t p = 0;
      while (p < dim && v[p].is_zero()) ++p;
      if (p == dim) continue;
      v *= v[p].inverse();
      for (size_t k = 0; k < reduced.size(); ++k) {
        const Scalar f = reduced[k][p];
        if (!f.is_zero()) reduced[k] -= v * f;
      }
      reduced.push_back(std::move(v));
      pivot_cols.push_back(p);
      basis_rows.push_back(i);
    }
  }
  if (basis_rows.size() < dim) return std::nullopt;

  // Rays of the initial cone are the columns of the inverse of its rows.
  std::vector<Ray> rays;
  {
    Matrix aug;
    for (size_t i : basis_rows) {
      std::vector<Scalar> row(rows[i].begin(), rows[i].end());
      for (size_t k = 0; k < dim; ++k) row.push_back(Scalar(k == aug.size() ? 1 : 0));
      aug.emplace_back(std::move(row));
    }
    const RowEchelon e = rref(std::move(aug), dim);
    for (size_t k = 0; k < dim; ++k) {
      Vector col(dim);
      for (size_t r = 0; r < dim; ++r) col[e.pivots[r]] = e.rows[r][dim + k];
      Ray ray{primitive_integer(col), Bits(m)};
      for (size_t j = 0; j < dim; ++j) {
        if (j != k) ray.zero.set(basis_rows[j]);
      }
      rays.push_back(std::move(ray));
    }
  }

  std::vector<bool> in_basis(m, false);
  for (size_t i : basis_rows) in_basis[i] = true;

  const size_t min_common = dim >= 2 ? dim - 2 : 0;
  std::vector<Scalar> val;
  for (size_t i = 0; i < m; ++i) {
    if (in_basis[i]) continue;
    val.resize(rays.size());
    bool any_negative = false;
    for (size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rows[i], rays[r].v);
      any_negative = any_negative || val[r].sign() < 0;
    }
    if (!any_negative) {
      for (size_t r = 0; r < rays.size(); ++r) {
        if (val[r].is_zero()) rays[r].zero.set(i);
      }
      continue;
    }

    std::vector<Ray> next;
    std::vector<size_t> pos, neg;
    for (size_t r = 0; r < rays.size(); ++r) {
      const int s = val[r].sign();
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
      if (s >= 0) {
        Ray kept = rays[r];
        if (s == 0) kept.zero.set(i);
        next.push_back(std::move(kept));
      }
    }
    for (size_t p : pos) {
      for (size_t q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Vector v = rays[q].v * val[p] - rays[p].v * val[q];
        common.set(i);
        next.push_back(Ray{primitive_integer(v), std::move(common)});
        if (next.size() > kMaxWorkingRays) {
          throw CapabilityError("double description exceeded " +
                                std::to_string(kMaxWorkingRays) + " intermediate rays");
        }
      }
    }
    rays = std::move(next);
  }

  std::vector<Vector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace radii
