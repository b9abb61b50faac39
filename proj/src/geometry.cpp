#include "toric/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace toric {

namespace {

void check_parameter(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("parameter " + std::to_string(u) + " outside [0, 1]", "u");
  }
}

// Nonzero basis values N_{span-p .. span, p}(u), Piegl & Tiller A2.2.
std::vector<double> local_basis(const KnotVector& kv, std::size_t span, double u) {
  const int p = kv.degree();
  std::vector<double> n(p + 1, 0.0);
  std::vector<double> left(p + 1, 0.0);
  std::vector<double> right(p + 1, 0.0);
  n[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = u - kv[span + 1 - j];
    right[j] = kv[span + j] - u;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double tmp = n[r] / (right[r + 1] + left[j - r]);
      n[r] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    n[j] = saved;
  }
  return n;
}

}  // namespace

KnotVector::KnotVector(int degree, std::vector<double> knots)
    : degree_(degree), knots_(std::move(knots)) {
  if (degree_ < 1) throw ValidationError("degree must be >= 1", "degree");
  const std::size_t p = static_cast<std::size_t>(degree_);
  if (knots_.size() < 2 * p + 2) {
    throw ValidationError("knot vector needs at least 2*(degree+1) entries", "knots");
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const double k = knots_[i];
    if (!std::isfinite(k) || k < 0.0 || k > 1.0) {
      throw ValidationError("knot " + std::to_string(i) + " outside [0, 1]", "knots");
    }
    if (i > 0 && k < knots_[i - 1]) {
      throw ValidationError("knots must be nondecreasing (index " + std::to_string(i) + ")",
                            "knots");
    }
  }
  for (std::size_t i = 0; i <= p; ++i) {
    if (knots_[i] != 0.0 || knots_[knots_.size() - 1 - i] != 1.0) {
      throw ValidationError("knot vector must be clamped: first and last degree+1 knots equal 0 and 1",
                            "knots");
    }
  }
  if (knots_[p + 1] == 0.0 || knots_[knots_.size() - p - 2] == 1.0) {
    throw ValidationError("end knots repeated more than degree+1 times", "knots");
  }
  std::size_t run = 1;
  for (std::size_t i = p + 2; i + p + 1 < knots_.size(); ++i) {
    run = knots_[i] == knots_[i - 1] ? run + 1 : 1;
    if (run > p) {
      throw ValidationError("interior knot multiplicity exceeds degree", "knots");
    }
  }
}

std::vector<double> KnotVector::distinct_interior() const {
  std::vector<double> out;
  for (std::size_t i = degree_ + 1; i + degree_ + 1 < knots_.size(); ++i) {
    if (out.empty() || out.back() != knots_[i]) out.push_back(knots_[i]);
  }
  return out;
}

int KnotVector::multiplicity(double u) const {
  return static_cast<int>(std::count(knots_.begin(), knots_.end(), u));
}

std::size_t KnotVector::find_span(double u) const {
  const std::size_t n = control_count();
  if (u >= knots_[n]) return n - 1;
  const auto it = std::upper_bound(knots_.begin() + degree_, knots_.begin() + n + 1, u);
  return static_cast<std::size_t>(it - knots_.begin()) - 1;
}

KnotVector KnotVector::with_inserted(double u) const {
  std::vector<double> k = knots_;
  k.insert(std::upper_bound(k.begin(), k.end(), u), u);
  return KnotVector(degree_, std::move(k));
}

LatticeSet::LatticeSet(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw ValidationError("lattice set must be nonempty", "lattice");
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) {
      throw ValidationError("lattice indices must be strictly increasing", "lattice");
    }
  }
}

LatticeSet LatticeSet::range(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return LatticeSet(std::move(v));
}

LiftingFunction::LiftingFunction(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("lifting values must be finite", "lifting");
  }
}

LiftingFunction LiftingFunction::constant(std::size_t n, double value) {
  return LiftingFunction(std::vector<double>(n, value));
}

double LiftingFunction::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

CurveSpec::CurveSpec(KnotVector knots, std::vector<Point> points, std::vector<double> weights,
                     int dimension)
    : knots_(std::move(knots)),
      points_(std::move(points)),
      weights_(std::move(weights)),
      dimension_(dimension) {
  if (dimension_ != 2 && dimension_ != 3) {
    throw ValidationError("dimension must be 2 or 3", "points");
  }
  if (points_.size() != knots_.control_count()) {
    throw ValidationError("expected " + std::to_string(knots_.control_count()) +
                              " control points for this knot vector, got " +
                              std::to_string(points_.size()),
                          "points");
  }
  if (weights_.size() != points_.size()) {
    throw ValidationError("weights and points differ in length", "weights");
  }
  for (const Point& p : points_) {
    if (!is_finite(p)) throw ValidationError("control point coordinates must be finite", "points");
    if (dimension_ == 2 && p.z != 0.0) {
      throw ValidationError("planar curve with nonzero z coordinate", "points");
    }
  }
  for (double w : weights_) {
    if (!std::isfinite(w) || !(w > 0.0)) throw ValidationError("weights must be positive", "weights");
  }
}

std::size_t CurveSpec::segment_count() const { return knots_.distinct_interior().size() + 1; }

LatticeSet CurveSpec::lattice() const {
  return LatticeSet::range(0, static_cast<int>(points_.size()) - 1);
}

void CurveSpec::check_lifting(const LiftingFunction& lifting) const {
  if (lifting.size() != points_.size()) {
    throw ValidationError("lifting has " + std::to_string(lifting.size()) + " values, expected " +
                              std::to_string(points_.size()),
                          "lifting");
  }
}

std::vector<double> bspline_basis_all(const KnotVector& kv, double u) {
  check_parameter(u);
  const std::size_t span = kv.find_span(u);
  const std::vector<double> local = local_basis(kv, span, u);
  std::vector<double> all(kv.control_count(), 0.0);
  const std::size_t first = span - kv.degree();
  std::copy(local.begin(), local.end(), all.begin() + static_cast<std::ptrdiff_t>(first));
  return all;
}

Point eval_nurbs(const CurveSpec& spec, double u) {
  check_parameter(u);
  const KnotVector& kv = spec.knot_vector();
  const std::size_t span = kv.find_span(u);
  const std::vector<double> n = local_basis(kv, span, u);
  const std::size_t first = span - kv.degree();
  Point num;
  double den = 0.0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    const double w = spec.weights()[first + j] * n[j];
    num += w * spec.points()[first + j];
    den += w;
  }
  return num * (1.0 / den);
}

Point eval_nurbs_lifted(const CurveSpec& spec, const LiftingFunction& lifting, double t, double u) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive and finite", "t");
  spec.check_lifting(lifting);
  check_parameter(u);
  const KnotVector& kv = spec.knot_vector();
  const std::size_t span = kv.find_span(u);
  const std::vector<double> n = local_basis(kv, span, u);
  const std::size_t first = span - kv.degree();

  double top = -INFINITY;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] > 0.0) top = std::max(top, lifting[first + j]);
  }
  const double log_t = std::log(t);
  Point num;
  double den = 0.0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] == 0.0) continue;
    const double scale = std::exp((lifting[first + j] - top) * log_t);
    const double w = scale * spec.weights()[first + j] * n[j];
    num += w * spec.points()[first + j];
    den += w;
  }
  return num * (1.0 / den);
}

Point eval_toric_bezier(const ToricBezierPiece& piece, double x) {
  const auto idx = piece.lattice.indices();
  if (idx.empty()) throw DegenerateError("toric piece has an empty lattice");
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i] <= idx[i - 1]) throw DegenerateError("toric piece lattice is not strictly increasing");
  }
  if (piece.coeffs.size() != idx.size() || piece.weights.size() != idx.size() ||
      piece.points.size() != idx.size()) {
    throw DegenerateError("toric piece arrays differ in length");
  }
  const double a0 = idx.front();
  const double am = idx.back();
  if (!(x >= a0 && x <= am)) {
    throw DomainError("x outside the piece domain [" + std::to_string(a0) + ", " +
                          std::to_string(am) + "]",
                      "x");
  }
  if (x == a0) return piece.points.front();
  if (x == am) return piece.points.back();

  // Factor out the largest term in log space; exponents can be large on gapped lattices.
  const double l0 = std::log(x - a0);
  const double l1 = std::log(am - x);
  std::vector<double> logs(idx.size());
  double top = -INFINITY;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    logs[i] = std::log(piece.coeffs[i] * piece.weights[i]) + (idx[i] - a0) * l0 + (am - idx[i]) * l1;
    top = std::max(top, logs[i]);
  }
  Point num;
  double den = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double w = std::exp(logs[i] - top);
    num += w * piece.points[i];
    den += w;
  }
  return num * (1.0 / den);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace toric
