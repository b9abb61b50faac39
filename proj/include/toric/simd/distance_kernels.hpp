#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/point.hpp"

namespace toric::simd {

/// Lane padding of every batch; padded slots repeat the last real element so
/// min/max reductions are unaffected.
inline constexpr std::size_t kBatchPad = 4;

/// Segments in structure-of-arrays layout: start a, direction d = b - a and
/// 1/|d|^2 (0 for a zero-length segment, which then acts as a point).
class SegmentBatch {
 public:
  SegmentBatch() = default;
  void add(const Point& a, const Point& b);
  void add_point(const Point& p) { add(p, p); }
  /// Consecutive vertex pairs; a single vertex becomes a point segment.
  void add_polyline(std::span<const Point> vertices);

  std::size_t size() const noexcept { return count_; }
  std::size_t padded_size() const noexcept { return ax_.size(); }
  bool empty() const noexcept { return count_ == 0; }

  const double* ax() const noexcept { return ax_.data(); }
  const double* ay() const noexcept { return ay_.data(); }
  const double* az() const noexcept { return az_.data(); }
  const double* dx() const noexcept { return dx_.data(); }
  const double* dy() const noexcept { return dy_.data(); }
  const double* dz() const noexcept { return dz_.data(); }
  const double* inv_len2() const noexcept { return inv_len2_.data(); }

 private:
  void repad();

  std::size_t count_ = 0;
  std::vector<double> ax_, ay_, az_, dx_, dy_, dz_, inv_len2_;
};

class PointBatch {
 public:
  PointBatch() = default;
  explicit PointBatch(std::span<const Point> points);
  void add(const Point& p);

  std::size_t size() const noexcept { return xs_.size(); }
  bool empty() const noexcept { return xs_.empty(); }
  const double* xs() const noexcept { return xs_.data(); }
  const double* ys() const noexcept { return ys_.data(); }
  const double* zs() const noexcept { return zs_.data(); }

 private:
  std::vector<double> xs_, ys_, zs_;
};

enum class Isa { scalar, avx2, neon };

const char* to_string(Isa isa);

struct KernelTable {
  Isa isa;
  /// min over segments of the squared distance from (qx, qy, qz).
  double (*min_sq_distance)(double qx, double qy, double qz, const SegmentBatch& segs);
  /// max over queries of min_sq_distance; the squared directed Hausdorff
  /// distance from the query points to the segment set.
  double (*max_min_sq_distance)(const PointBatch& queries, const SegmentBatch& segs);
};

const KernelTable& scalar_kernels();

/// Kernel tables compiled in and supported by this CPU, scalar first.
std::vector<const KernelTable*> available_kernels();

/// Widest available table; TORIC_SIMD=scalar in the environment forces the
/// scalar reference.
const KernelTable& active_kernels();

}  // namespace toric::simd
