// AVX2 variants. Functions carry a target attribute instead of compiling the
// whole file with -mavx2, so header inline functions instantiated here stay
// baseline x86-64 code and cannot leak AVX2 into the rest of the link.
//
// Points are loaded two per register as (x0, y0, x1, y1). Squared distances
// use the same operation order as the scalar kernels (dx*dx + dy*dy, no FMA),
// so results are bitwise identical.

#include <immintrin.h>

#include <cassert>

#include "udc/simd.hpp"

#define UDC_AVX2 __attribute__((target("avx2")))

namespace udc::simd::avx2 {
namespace {

// Returns squared distances in lane order (k, k+2, k+1, k+3).
UDC_AVX2 inline __m256d four_dist_sq(const Point* p, __m256d q2) {
  const __m256d v0 = _mm256_loadu_pd(&p[0].x);
  const __m256d v1 = _mm256_loadu_pd(&p[2].x);
  const __m256d d0 = _mm256_sub_pd(v0, q2);
  const __m256d d1 = _mm256_sub_pd(v1, q2);
  return _mm256_hadd_pd(_mm256_mul_pd(d0, d0), _mm256_mul_pd(d1, d1));
}

UDC_AVX2 inline double tail_dist_sq(Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return dx * dx + dy * dy;
}

}  // namespace

UDC_AVX2 Nearest nearest(Point q, std::span<const Point> pts) {
  const std::size_t n = pts.size();
  const Point* data = pts.data();
  Nearest best;
  std::size_t k = 0;
  if (n >= 4) {
    const __m256d q2 = _mm256_setr_pd(q.x, q.y, q.x, q.y);
    __m256d best_d = _mm256_set1_pd(best.dist_sq);
    __m256d best_i = _mm256_set1_pd(-1.0);
    __m256d idx = _mm256_setr_pd(0.0, 2.0, 1.0, 3.0);
    const __m256d step = _mm256_set1_pd(4.0);
    for (; k + 4 <= n; k += 4) {
      const __m256d d = four_dist_sq(data + k, q2);
      const __m256d lt = _mm256_cmp_pd(d, best_d, _CMP_LT_OQ);
      best_d = _mm256_blendv_pd(best_d, d, lt);
      best_i = _mm256_blendv_pd(best_i, idx, lt);
      idx = _mm256_add_pd(idx, step);
    }
    alignas(32) double ds[4];
    alignas(32) double is[4];
    _mm256_store_pd(ds, best_d);
    _mm256_store_pd(is, best_i);
    for (int lane = 0; lane < 4; ++lane) {
      if (is[lane] < 0.0) continue;
      const auto li = static_cast<std::size_t>(is[lane]);
      if (ds[lane] < best.dist_sq || (ds[lane] == best.dist_sq && li < best.index)) {
        best.dist_sq = ds[lane];
        best.index = li;
      }
    }
  }
  for (; k < n; ++k) {
    const double d = tail_dist_sq(q, data[k]);
    if (d < best.dist_sq) {
      best.dist_sq = d;
      best.index = k;
    }
  }
  return best;
}

UDC_AVX2 std::uint64_t within_mask(Point c, std::span<const Point> pts, double r2) {
  assert(pts.size() <= 64);
  const std::size_t n = pts.size();
  const Point* data = pts.data();
  std::uint64_t mask = 0;
  std::size_t k = 0;
  const __m256d q2 = _mm256_setr_pd(c.x, c.y, c.x, c.y);
  const __m256d lim = _mm256_set1_pd(r2);
  for (; k + 4 <= n; k += 4) {
    const __m256d d = four_dist_sq(data + k, q2);
    const auto m = static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(d, lim, _CMP_LE_OQ)));
    // Undo the (k, k+2, k+1, k+3) lane order.
    const std::uint64_t ordered = (m & 1u) | ((m >> 1) & 2u) | ((m << 1) & 4u) | (m & 8u);
    mask |= ordered << k;
  }
  for (; k < n; ++k) {
    if (tail_dist_sq(c, data[k]) <= r2) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

UDC_AVX2 void cell_keys(std::span<const Point> pts, double side, std::span<GridKey> out) {
  assert(out.size() >= pts.size());
  static_assert(sizeof(GridKey) == 2 * sizeof(std::int64_t));
  const std::size_t n = pts.size();
  const Point* data = pts.data();
  GridKey* dst = out.data();
  // Adding 1.5 * 2^52 places an integer-valued double |v| < 2^51 in the low
  // mantissa bits; subtracting the magic's bit pattern recovers it as int64.
  const __m256d magic = _mm256_set1_pd(6755399441055744.0);
  const __m256i magic_bits = _mm256_castpd_si256(magic);
  const __m256d s = _mm256_set1_pd(side);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d v = _mm256_loadu_pd(&data[k].x);
    const __m256d f = _mm256_floor_pd(_mm256_div_pd(v, s));
    const __m256i bits = _mm256_castpd_si256(_mm256_add_pd(f, magic));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&dst[k]), _mm256_sub_epi64(bits, magic_bits));
  }
  for (; k < n; ++k) {
    dst[k] = {static_cast<std::int64_t>(__builtin_floor(data[k].x / side)),
              static_cast<std::int64_t>(__builtin_floor(data[k].y / side))};
  }
}

}  // namespace udc::simd::avx2
