// NEON variants for AArch64 (Advanced SIMD is part of the base ISA there).

#include <arm_neon.h>

#include <cassert>
#include <cmath>

#include "udc/simd.hpp"

namespace udc::simd::neon {
namespace {

inline float64x2_t two_dist_sq(const Point* p, float64x2_t q) {
  const float64x2_t d0 = vsubq_f64(vld1q_f64(&p[0].x), q);
  const float64x2_t d1 = vsubq_f64(vld1q_f64(&p[1].x), q);
  return vpaddq_f64(vmulq_f64(d0, d0), vmulq_f64(d1, d1));
}

}  // namespace

Nearest nearest(Point q, std::span<const Point> pts) {
  const std::size_t n = pts.size();
  const Point* data = pts.data();
  Nearest best;
  std::size_t k = 0;
  if (n >= 2) {
    const float64x2_t qv = {q.x, q.y};
    float64x2_t best_d = vdupq_n_f64(best.dist_sq);
    float64x2_t best_i = vdupq_n_f64(-1.0);
    float64x2_t idx = {0.0, 1.0};
    const float64x2_t step = vdupq_n_f64(2.0);
    for (; k + 2 <= n; k += 2) {
      const float64x2_t d = two_dist_sq(data + k, qv);
      const uint64x2_t lt = vcltq_f64(d, best_d);
      best_d = vbslq_f64(lt, d, best_d);
      best_i = vbslq_f64(lt, idx, best_i);
      idx = vaddq_f64(idx, step);
    }
    double ds[2];
    double is[2];
    vst1q_f64(ds, best_d);
    vst1q_f64(is, best_i);
    for (int lane = 0; lane < 2; ++lane) {
      if (is[lane] < 0.0) continue;
      const auto li = static_cast<std::size_t>(is[lane]);
      if (ds[lane] < best.dist_sq || (ds[lane] == best.dist_sq && li < best.index)) {
        best.dist_sq = ds[lane];
        best.index = li;
      }
    }
  }
  for (; k < n; ++k) {
    const double d = dist_sq(q, data[k]);
    if (d < best.dist_sq) {
      best.dist_sq = d;
      best.index = k;
    }
  }
  return best;
}

std::uint64_t within_mask(Point c, std::span<const Point> pts, double r2) {
  assert(pts.size() <= 64);
  const std::size_t n = pts.size();
  const Point* data = pts.data();
  const float64x2_t qv = {c.x, c.y};
  const float64x2_t lim = vdupq_n_f64(r2);
  std::uint64_t mask = 0;
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const uint64x2_t le = vcleq_f64(two_dist_sq(data + k, qv), lim);
    mask |= (vgetq_lane_u64(le, 0) & 1u) << k;
    mask |= (vgetq_lane_u64(le, 1) & 1u) << (k + 1);
  }
  for (; k < n; ++k) {
    if (dist_sq(c, data[k]) <= r2) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

void cell_keys(std::span<const Point> pts, double side, std::span<GridKey> out) {
  assert(out.size() >= pts.size());
  const float64x2_t s = vdupq_n_f64(side);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const float64x2_t f = vrndmq_f64(vdivq_f64(vld1q_f64(&pts[k].x), s));
    vst1q_s64(&out[k].i, vcvtq_s64_f64(f));
  }
}

}  // namespace udc::simd::neon
