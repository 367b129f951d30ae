#include "radii/harness/random.hpp"

#include <string>

#include "radii/errors.hpp"

namespace radii::harness {

namespace {

constexpr uint64_t kPolytopeSalt = 0x9e3779b97f4a7c15ULL;
constexpr uint64_t kGaugeSalt = 0xc2b2ae3d27d4eb4fULL;
constexpr int kMaxDraws = 1000;

void check_caps(size_t n, size_t vertex_count) {
  if (n == 0 || n > kMaxRandomDim) {
    throw CapabilityError("random polytope dimension must be in 1.." + std::to_string(kMaxRandomDim));
  }
  if (vertex_count > kMaxRandomVertices) {
    throw CapabilityError("random polytope vertex count exceeds " + std::to_string(kMaxRandomVertices));
  }
}

}  // namespace

VPolytope random_polytope(uint64_t seed, size_t n, size_t vertex_count) {
  check_caps(n, vertex_count);
  if (vertex_count < n + 1) throw InputError("a full-dimensional polytope needs at least n+1 points");
  Rng rng(seed ^ kPolytopeSalt);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::vector<Vector> pts;
    for (size_t i = 0; i < vertex_count; ++i) pts.push_back(rng.point(n));
    VPolytope p = reduce_v(n, pts);
    if (p.full_dimensional()) return p;
  }
  throw std::logic_error("random_polytope: no full-dimensional draw");
}

Gauge random_gauge(uint64_t seed, size_t n, size_t vertex_count) {
  check_caps(n, vertex_count);
  if (vertex_count < n) throw InputError("a full-dimensional gauge needs at least n generating points");
  Rng rng(seed ^ kGaugeSalt);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::vector<Vector> pts;
    for (size_t i = 0; i < vertex_count; ++i) {
      Vector v = rng.point(n);
      pts.push_back(-v);
      pts.push_back(std::move(v));
    }
    VPolytope body = reduce_v(n, pts);
    if (body.full_dimensional()) return Gauge(std::move(body));
  }
  throw std::logic_error("random_gauge: no full-dimensional draw");
}

}  // namespace radii::harness
