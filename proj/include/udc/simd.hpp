#pragma once

// Data-parallel inner loops used by the grid index, the cover verifier, the
// exact oracle and the FastCover family. Every kernel has a scalar reference
// implementation; vector variants must produce bitwise-identical results.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>

#include "udc/geom.hpp"

namespace udc::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Best instruction set the running CPU supports among those compiled in.
Isa detected_isa();

/// Instruction set used by the dispatching entry points below. Defaults to
/// detected_isa(); the environment variable UDC_SIMD=scalar forces scalar.
Isa active_isa();

/// Overrides the dispatch target (tests and benchmarks). Throws
/// std::invalid_argument if `isa` is not available on this CPU.
void set_active_isa(Isa isa);

bool isa_available(Isa isa);

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

struct Nearest {
  std::size_t index = kNoIndex;
  double dist_sq = std::numeric_limits<double>::infinity();

  [[nodiscard]] bool found() const { return index != kNoIndex; }
};

struct Kernels {
  /// Argmin of dist_sq(q, pts[k]); ties go to the smallest index.
  Nearest (*nearest)(Point q, std::span<const Point> pts);
  /// Bit k set iff dist_sq(c, pts[k]) <= r2. Requires pts.size() <= 64.
  std::uint64_t (*within_mask)(Point c, std::span<const Point> pts, double r2);
  /// out[k] = (floor(pts[k].x / side), floor(pts[k].y / side)).
  void (*cell_keys)(std::span<const Point> pts, double side, std::span<GridKey> out);
};

const Kernels& kernels_for(Isa isa);

inline Nearest nearest(Point q, std::span<const Point> pts) {
  return kernels_for(active_isa()).nearest(q, pts);
}

inline std::uint64_t within_mask(Point c, std::span<const Point> pts, double r2) {
  return kernels_for(active_isa()).within_mask(c, pts, r2);
}

inline void cell_keys(std::span<const Point> pts, double side, std::span<GridKey> out) {
  kernels_for(active_isa()).cell_keys(pts, side, out);
}

namespace scalar {
Nearest nearest(Point q, std::span<const Point> pts);
std::uint64_t within_mask(Point c, std::span<const Point> pts, double r2);
void cell_keys(std::span<const Point> pts, double side, std::span<GridKey> out);
}  // namespace scalar

#if defined(UDC_HAVE_AVX2)
namespace avx2 {
Nearest nearest(Point q, std::span<const Point> pts);
std::uint64_t within_mask(Point c, std::span<const Point> pts, double r2);
void cell_keys(std::span<const Point> pts, double side, std::span<GridKey> out);
}  // namespace avx2
#endif

#if defined(UDC_HAVE_NEON)
namespace neon {
Nearest nearest(Point q, std::span<const Point> pts);
std::uint64_t within_mask(Point c, std::span<const Point> pts, double r2);
void cell_keys(std::span<const Point> pts, double side, std::span<GridKey> out);
}  // namespace neon
#endif

}  // namespace udc::simd
