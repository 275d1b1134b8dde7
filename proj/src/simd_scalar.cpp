#include <cassert>
#include <cmath>

#include "udc/simd.hpp"

namespace udc::simd::scalar {

Nearest nearest(Point q, std::span<const Point> pts) {
  Nearest best;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double d = dist_sq(q, pts[k]);
    if (d < best.dist_sq) {
      best.dist_sq = d;
      best.index = k;
    }
  }
  return best;
}

std::uint64_t within_mask(Point c, std::span<const Point> pts, double r2) {
  assert(pts.size() <= 64);
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (dist_sq(c, pts[k]) <= r2) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

void cell_keys(std::span<const Point> pts, double side, std::span<GridKey> out) {
  assert(out.size() >= pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) out[k] = cell_of(pts[k], side);
}

}  // namespace udc::simd::scalar
