#pragma once

// Independent reference implementations used only by tests. None of these
// call into the library's evaluation or hull code.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "toric/geometry.hpp"

namespace oracle {

using toric::Point;

// Textbook Cox-de Boor recursion. At u = 1 the degree-0 basis of the last
// nonempty span is 1, matching the left-limit convention.
inline double basis(const std::vector<double>& U, int i, int p, double u) {
  if (p == 0) {
    if (U[i] <= u && u < U[i + 1]) return 1.0;
    if (u == U.back() && U[i] < u && U[i + 1] == u) return 1.0;
    return 0.0;
  }
  double left = 0.0, right = 0.0;
  if (U[i + p] > U[i]) left = (u - U[i]) / (U[i + p] - U[i]) * basis(U, i, p - 1, u);
  if (U[i + p + 1] > U[i + 1]) {
    right = (U[i + p + 1] - u) / (U[i + p + 1] - U[i + 1]) * basis(U, i + 1, p - 1, u);
  }
  return left + right;
}

// Rational curve from explicit basis sums, weights taken as given.
inline Point nurbs(const std::vector<double>& U, int p, const std::vector<Point>& P,
                   const std::vector<double>& w, double u) {
  Point num;
  double den = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    const double b = basis(U, static_cast<int>(i), p, u) * w[i];
    num += b * P[i];
    den += b;
  }
  return num * (1.0 / den);
}

struct Homogeneous {
  double wx, wy, wz, w;
};

// Plain numeric Boehm insertion on homogeneous control points.
inline void insert(std::vector<double>& U, int p, std::vector<Homogeneous>& Q, double u) {
  int k = 0;
  while (k + 1 < static_cast<int>(U.size()) && U[k + 1] <= u) ++k;
  int s = 0;
  for (double x : U) s += x == u;
  std::vector<Homogeneous> out;
  for (int i = 0; i <= static_cast<int>(Q.size()); ++i) {
    if (i <= k - p) {
      out.push_back(Q[i]);
    } else if (i <= k - s) {
      const double a = (u - U[i]) / (U[i + p] - U[i]);
      const Homogeneous& l = Q[i - 1];
      const Homogeneous& r = Q[i];
      out.push_back({(1 - a) * l.wx + a * r.wx, (1 - a) * l.wy + a * r.wy,
                     (1 - a) * l.wz + a * r.wz, (1 - a) * l.w + a * r.w});
    } else {
      out.push_back(Q[i - 1]);
    }
  }
  U.insert(std::upper_bound(U.begin(), U.end(), u), u);
  Q = std::move(out);
}

// Upper-hull subsets by exhaustive supporting lines over integer lifts:
// for every pair (i, j) the line through their lifted points supports the
// set from above iff no point lies strictly above it; its subset is every
// point on the line. Exact integer arithmetic throughout.
inline std::vector<std::vector<int>> hull_subsets(const std::vector<int>& xs,
                                                  const std::vector<int>& lifts) {
  const std::size_t n = xs.size();
  std::set<std::vector<int>> found;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t dx = xs[j] - xs[i];
      const std::int64_t dy = lifts[j] - lifts[i];
      bool supporting = true;
      std::vector<int> on;
      for (std::size_t k = 0; k < n; ++k) {
        // Sign of (lift_k - line(x_k)) * dx.
        const std::int64_t side = (lifts[k] - lifts[i]) * dx - dy * (xs[k] - xs[i]);
        if (side > 0) supporting = false;
        if (side == 0) on.push_back(xs[k]);
      }
      if (supporting) found.insert(on);
    }
  }
  return {found.begin(), found.end()};  // lexicographic == left to right
}

// All-pairs proper crossings of nonadjacent planar segments.
inline std::vector<std::array<std::size_t, 2>> crossings(const std::vector<Point>& poly) {
  auto orient = [](const Point& a, const Point& b, const Point& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return (v > 0) - (v < 0);
  };
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    for (std::size_t j = i + 2; j + 1 < poly.size(); ++j) {
      const int o1 = orient(poly[i], poly[i + 1], poly[j]);
      const int o2 = orient(poly[i], poly[i + 1], poly[j + 1]);
      const int o3 = orient(poly[j], poly[j + 1], poly[i]);
      const int o4 = orient(poly[j], poly[j + 1], poly[i + 1]);
      if (o1 * o2 < 0 && o3 * o4 < 0) out.push_back({i, j});
    }
  }
  return out;
}

// Random clamped spec: p in [1, max_p], n spans in [1, max_n], simple
// interior knots, weights in [0.5, 5], points in the unit box.
inline toric::CurveSpec random_spec(std::mt19937_64& rng, int max_p = 4, int max_n = 6) {
  std::uniform_int_distribution<int> pd(1, max_p), nd(1, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0), wd(0.5, 5.0);
  const int p = pd(rng);
  const int n = nd(rng);
  std::vector<double> interior;
  while (static_cast<int>(interior.size()) < n - 1) {
    const double u = 0.02 + 0.96 * unit(rng);
    bool clash = false;
    for (double v : interior) clash |= std::abs(u - v) < 1e-3;
    if (!clash) interior.push_back(u);
  }
  std::sort(interior.begin(), interior.end());
  std::vector<double> U(p + 1, 0.0);
  U.insert(U.end(), interior.begin(), interior.end());
  U.insert(U.end(), p + 1, 1.0);
  const int count = n + p;
  std::vector<Point> P;
  std::vector<double> w;
  for (int i = 0; i < count; ++i) {
    const double x = unit(rng);
    const double y = unit(rng);
    P.push_back({x, y, 0.0});
    w.push_back(wd(rng));
  }
  return toric::CurveSpec(toric::KnotVector(p, U), P, w);
}

inline toric::LiftingFunction random_lifting(std::mt19937_64& rng, std::size_t count, int lo = 0,
                                             int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<double> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(d(rng));
  return toric::LiftingFunction(v);
}

}  // namespace oracle
