#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "toric/simd/distance_kernels.hpp"

using namespace toric;
using namespace toric::simd;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

SegmentBatch random_segments(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  SegmentBatch s;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a{u(rng), u(rng), u(rng)};
    // Every fifth segment has zero length.
    const Point b = i % 5 == 0 ? a : Point{u(rng), u(rng), u(rng)};
    s.add(a, b);
  }
  return s;
}

}  // namespace

TEST_CASE("batches pad with the last element") {
  SegmentBatch s;
  CHECK(s.empty());
  s.add({0, 0}, {1, 0});
  CHECK(s.size() == 1);
  CHECK(s.padded_size() == kBatchPad);
  for (std::size_t j = 0; j < s.padded_size(); ++j) CHECK(s.dx()[j] == 1.0);
  s.add_point({5, 5});
  CHECK(s.size() == 2);
  CHECK(s.inv_len2()[1] == 0.0);
  s.add_polyline(std::vector<Point>{{0, 0}, {1, 1}, {2, 0}});
  CHECK(s.size() == 4);
}

TEST_CASE("scalar kernel computes point-segment distances") {
  SegmentBatch s;
  s.add({0, 0}, {2, 0});
  const auto& k = scalar_kernels();
  CHECK(k.min_sq_distance(1, 1, 0, s) == 1.0);
  CHECK(k.min_sq_distance(3, 0, 0, s) == 1.0);
  CHECK(k.min_sq_distance(-1, -1, 0, s) == 2.0);
  CHECK(std::isinf(k.min_sq_distance(0, 0, 0, SegmentBatch{})));
  PointBatch q(std::vector<Point>{{1, 0.5}, {1, 2}});
  CHECK(k.max_min_sq_distance(q, s) == 4.0);
}

TEST_CASE("every available kernel table is bit-identical to the scalar reference") {
  const auto tables = available_kernels();
  REQUIRE(tables.front()->isa == Isa::scalar);
  MESSAGE("kernel tables: " << tables.size() << ", active: " << std::string(to_string(active_kernels().isa)));
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-12.0, 12.0);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 257u}) {
    const SegmentBatch segs = random_segments(rng, n);
    PointBatch queries;
    for (int i = 0; i < 50; ++i) queries.add({u(rng), u(rng), u(rng)});
    for (const KernelTable* t : tables) {
      for (std::size_t i = 0; i < queries.size(); ++i) {
        const double ref =
            scalar_kernels().min_sq_distance(queries.xs()[i], queries.ys()[i], queries.zs()[i], segs);
        const double got = t->min_sq_distance(queries.xs()[i], queries.ys()[i], queries.zs()[i], segs);
        CHECK(bit_equal(ref, got));
      }
      CHECK(bit_equal(scalar_kernels().max_min_sq_distance(queries, segs),
                      t->max_min_sq_distance(queries, segs)));
    }
  }
}

TEST_CASE("active table is one of the available ones") {
  bool found = false;
  for (const KernelTable* t : available_kernels()) found |= t == &active_kernels();
  CHECK(found);
  CHECK(std::string(to_string(Isa::avx2)) == "avx2");
}
