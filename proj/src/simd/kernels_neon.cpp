// NEON kernels for AArch64, two segments per lane group.

#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "kernels_internal.hpp"

namespace toric::simd::detail {

double min_sq_distance_neon(double qx, double qy, double qz, const SegmentBatch& segs) {
  if (segs.empty()) return std::numeric_limits<double>::infinity();
  const float64x2_t px = vdupq_n_f64(qx);
  const float64x2_t py = vdupq_n_f64(qy);
  const float64x2_t pz = vdupq_n_f64(qz);
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  float64x2_t best = vdupq_n_f64(std::numeric_limits<double>::infinity());

  for (std::size_t j = 0; j < segs.padded_size(); j += 2) {
    const float64x2_t dx = vld1q_f64(segs.dx() + j);
    const float64x2_t dy = vld1q_f64(segs.dy() + j);
    const float64x2_t dz = vld1q_f64(segs.dz() + j);
    const float64x2_t wx = vsubq_f64(px, vld1q_f64(segs.ax() + j));
    const float64x2_t wy = vsubq_f64(py, vld1q_f64(segs.ay() + j));
    const float64x2_t wz = vsubq_f64(pz, vld1q_f64(segs.az() + j));
    // Separate mul/add (no vfmaq) to round like the scalar reference.
    float64x2_t s = vaddq_f64(vaddq_f64(vmulq_f64(wx, dx), vmulq_f64(wy, dy)), vmulq_f64(wz, dz));
    s = vmulq_f64(s, vld1q_f64(segs.inv_len2() + j));
    s = vminq_f64(vmaxq_f64(s, zero), one);
    const float64x2_t ex = vsubq_f64(wx, vmulq_f64(s, dx));
    const float64x2_t ey = vsubq_f64(wy, vmulq_f64(s, dy));
    const float64x2_t ez = vsubq_f64(wz, vmulq_f64(s, dz));
    const float64x2_t d2 =
        vaddq_f64(vaddq_f64(vmulq_f64(ex, ex), vmulq_f64(ey, ey)), vmulq_f64(ez, ez));
    best = vminq_f64(best, d2);
  }
  return vminvq_f64(best);
}

double max_min_sq_distance_neon(const PointBatch& queries, const SegmentBatch& segs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    worst = std::max(worst,
                     min_sq_distance_neon(queries.xs()[i], queries.ys()[i], queries.zs()[i], segs));
  }
  return worst;
}

}  // namespace toric::simd::detail
