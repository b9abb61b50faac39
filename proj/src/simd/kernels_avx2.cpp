// AVX2 kernels, four segments per iteration. Built with -mavx2 only (no
// -mfma) so products are rounded exactly as in the scalar reference.

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "kernels_internal.hpp"

namespace toric::simd::detail {

namespace {

inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return std::min(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

}  // namespace

double min_sq_distance_avx2(double qx, double qy, double qz, const SegmentBatch& segs) {
  if (segs.empty()) return std::numeric_limits<double>::infinity();
  const __m256d px = _mm256_set1_pd(qx);
  const __m256d py = _mm256_set1_pd(qy);
  const __m256d pz = _mm256_set1_pd(qz);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  for (std::size_t j = 0; j < segs.padded_size(); j += 4) {
    const __m256d dx = _mm256_loadu_pd(segs.dx() + j);
    const __m256d dy = _mm256_loadu_pd(segs.dy() + j);
    const __m256d dz = _mm256_loadu_pd(segs.dz() + j);
    const __m256d wx = _mm256_sub_pd(px, _mm256_loadu_pd(segs.ax() + j));
    const __m256d wy = _mm256_sub_pd(py, _mm256_loadu_pd(segs.ay() + j));
    const __m256d wz = _mm256_sub_pd(pz, _mm256_loadu_pd(segs.az() + j));
    __m256d s = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(wx, dx), _mm256_mul_pd(wy, dy)),
                              _mm256_mul_pd(wz, dz));
    s = _mm256_mul_pd(s, _mm256_loadu_pd(segs.inv_len2() + j));
    s = _mm256_min_pd(_mm256_max_pd(s, zero), one);
    const __m256d ex = _mm256_sub_pd(wx, _mm256_mul_pd(s, dx));
    const __m256d ey = _mm256_sub_pd(wy, _mm256_mul_pd(s, dy));
    const __m256d ez = _mm256_sub_pd(wz, _mm256_mul_pd(s, dz));
    const __m256d d2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey)),
                                     _mm256_mul_pd(ez, ez));
    best = _mm256_min_pd(best, d2);
  }
  return hmin(best);
}

double max_min_sq_distance_avx2(const PointBatch& queries, const SegmentBatch& segs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    worst = std::max(worst,
                     min_sq_distance_avx2(queries.xs()[i], queries.ys()[i], queries.zs()[i], segs));
  }
  return worst;
}

}  // namespace toric::simd::detail
