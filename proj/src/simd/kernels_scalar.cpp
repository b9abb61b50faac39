// Scalar reference kernels. The vector variants evaluate the same expression
// tree lane by lane, so results agree bit for bit.

#include <algorithm>
#include <limits>

#include "kernels_internal.hpp"

namespace toric::simd::detail {

double min_sq_distance_scalar(double qx, double qy, double qz, const SegmentBatch& segs) {
  const double* ax = segs.ax();
  const double* ay = segs.ay();
  const double* az = segs.az();
  const double* dx = segs.dx();
  const double* dy = segs.dy();
  const double* dz = segs.dz();
  const double* inv = segs.inv_len2();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < segs.size(); ++j) {
    const double wx = qx - ax[j];
    const double wy = qy - ay[j];
    const double wz = qz - az[j];
    double s = (wx * dx[j] + wy * dy[j] + wz * dz[j]) * inv[j];
    s = std::min(std::max(s, 0.0), 1.0);
    const double ex = wx - s * dx[j];
    const double ey = wy - s * dy[j];
    const double ez = wz - s * dz[j];
    best = std::min(best, ex * ex + ey * ey + ez * ez);
  }
  return best;
}

double max_min_sq_distance_scalar(const PointBatch& queries, const SegmentBatch& segs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    worst = std::max(worst,
                     min_sq_distance_scalar(queries.xs()[i], queries.ys()[i], queries.zs()[i], segs));
  }
  return worst;
}

}  // namespace toric::simd::detail
