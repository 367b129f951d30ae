#pragma once

#include <cstdint>
#include <random>

#include "radii/polytope.hpp"

namespace radii::harness {

/// Seeded source of small rationals. Uses only the raw mt19937_64 stream
/// (whose output is fixed by the standard), so draws are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t bits() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<uint64_t>(hi - lo + 1));
  }
  /// p/q with |p| ≤ max_num and 1 ≤ q ≤ max_den.
  Scalar rational(long max_num, long max_den) {
    const long p = integer(-max_num, max_num);
    const long q = integer(1, max_den);
    return Scalar(p, q);
  }
  Vector point(size_t n, long max_num = 12, long max_den = 4) {
    Vector v(n);
    for (size_t i = 0; i < n; ++i) v[i] = rational(max_num, max_den);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr size_t kMaxRandomDim = 4;
inline constexpr size_t kMaxRandomVertices = 40;

/// Full-dimensional hull of `vertex_count` seeded rational points in Q^n.
/// Degenerate draws are rejected and redrawn. Same seed, same polytope.
VPolytope random_polytope(uint64_t seed, size_t n, size_t vertex_count);

/// conv(P ∪ −P) for `vertex_count` seeded rational points P; always a
/// valid Gauge.
Gauge random_gauge(uint64_t seed, size_t n, size_t vertex_count);

}  // namespace radii::harness
