#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"

namespace toric::simd {

void SegmentBatch::add(const Point& a, const Point& b) {
  // Drop padding, append, re-pad.
  ax_.resize(count_);
  ay_.resize(count_);
  az_.resize(count_);
  dx_.resize(count_);
  dy_.resize(count_);
  dz_.resize(count_);
  inv_len2_.resize(count_);
  const Point d = b - a;
  const double len2 = dot(d, d);
  ax_.push_back(a.x);
  ay_.push_back(a.y);
  az_.push_back(a.z);
  dx_.push_back(d.x);
  dy_.push_back(d.y);
  dz_.push_back(d.z);
  inv_len2_.push_back(len2 > 0.0 ? 1.0 / len2 : 0.0);
  ++count_;
  repad();
}

void SegmentBatch::add_polyline(std::span<const Point> vertices) {
  if (vertices.size() == 1) {
    add_point(vertices.front());
    return;
  }
  for (std::size_t i = 1; i < vertices.size(); ++i) add(vertices[i - 1], vertices[i]);
}

void SegmentBatch::repad() {
  const std::size_t padded = (count_ + kBatchPad - 1) / kBatchPad * kBatchPad;
  for (std::vector<double>* v : {&ax_, &ay_, &az_, &dx_, &dy_, &dz_, &inv_len2_}) {
    v->resize(padded, v->empty() ? 0.0 : (*v)[count_ - 1]);
  }
}

PointBatch::PointBatch(std::span<const Point> points) {
  xs_.reserve(points.size());
  ys_.reserve(points.size());
  zs_.reserve(points.size());
  for (const Point& p : points) add(p);
}

void PointBatch::add(const Point& p) {
  xs_.push_back(p.x);
  ys_.push_back(p.y);
  zs_.push_back(p.z);
}

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, detail::min_sq_distance_scalar,
                                 detail::max_min_sq_distance_scalar};
  return table;
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
#if defined(TORIC_HAVE_AVX2_KERNELS)
  static const KernelTable avx2{Isa::avx2, detail::min_sq_distance_avx2,
                                detail::max_min_sq_distance_avx2};
  if (__builtin_cpu_supports("avx2")) out.push_back(&avx2);
#endif
#if defined(TORIC_HAVE_NEON_KERNELS)
  static const KernelTable neon{Isa::neon, detail::min_sq_distance_neon,
                                detail::max_min_sq_distance_neon};
  out.push_back(&neon);
#endif
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* force = std::getenv("TORIC_SIMD");
    if (force && std::strcmp(force, "scalar") == 0) return &scalar_kernels();
    return available_kernels().back();
  }();
  return *chosen;
}

}  // namespace toric::simd
