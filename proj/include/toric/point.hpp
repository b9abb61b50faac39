#pragma once

#include <cmath>
#include <span>

namespace toric {

/// Model-space point. Planar data keeps z = 0.
struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Point& operator+=(const Point& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Point& operator-=(const Point& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Point& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Point& a, const Point& b) { return norm(a - b); }

inline bool is_finite(const Point& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

/// Diagonal of the axis-aligned bounding box; 0 for empty input.
inline double bbox_diameter(std::span<const Point> pts) {
  if (pts.empty()) return 0.0;
  Point lo = pts.front();
  Point hi = pts.front();
  for (const Point& p : pts) {
    lo = {std::fmin(lo.x, p.x), std::fmin(lo.y, p.y), std::fmin(lo.z, p.z)};
    hi = {std::fmax(hi.x, p.x), std::fmax(hi.y, p.y), std::fmax(hi.z, p.z)};
  }
  return distance(lo, hi);
}

/// Distance from p to the closed segment [a, b].
inline double distance_to_segment(const Point& p, const Point& a, const Point& b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  double s = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  s = s < 0.0 ? 0.0 : (s > 1.0 ? 1.0 : s);
  return distance(p, a + s * d);
}

}  // namespace toric
