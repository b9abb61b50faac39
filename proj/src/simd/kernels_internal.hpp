#pragma once

#include "toric/simd/distance_kernels.hpp"

namespace toric::simd::detail {

double min_sq_distance_scalar(double qx, double qy, double qz, const SegmentBatch& segs);
double max_min_sq_distance_scalar(const PointBatch& queries, const SegmentBatch& segs);

#if defined(TORIC_HAVE_AVX2_KERNELS)
double min_sq_distance_avx2(double qx, double qy, double qz, const SegmentBatch& segs);
double max_min_sq_distance_avx2(const PointBatch& queries, const SegmentBatch& segs);
#endif

#if defined(TORIC_HAVE_NEON_KERNELS)
double min_sq_distance_neon(double qx, double qy, double qz, const SegmentBatch& segs);
double max_min_sq_distance_neon(const PointBatch& queries, const SegmentBatch& segs);
#endif

}  // namespace toric::simd::detail
