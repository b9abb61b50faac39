#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/errors.hpp"
#include "toric/point.hpp"

namespace toric {

/// Clamped, nondecreasing knot sequence on [0, 1].
///
/// The first and last degree+1 knots are 0 and 1 respectively and no interior
/// knot repeats more than degree times. The number of control points of a
/// curve over this vector is size() - degree - 1.
class KnotVector {
 public:
  KnotVector(int degree, std::vector<double> knots);

  int degree() const noexcept { return degree_; }
  std::span<const double> knots() const noexcept { return knots_; }
  std::size_t size() const noexcept { return knots_.size(); }
  double operator[](std::size_t i) const { return knots_[i]; }

  std::size_t control_count() const noexcept { return knots_.size() - degree_ - 1; }

  /// Distinct interior knot values, ascending.
  std::vector<double> distinct_interior() const;

  /// Number of occurrences of value u (exact comparison).
  int multiplicity(double u) const;

  /// Index k with knots[k] <= u < knots[k+1]; at u = 1 the last nonempty
  /// span is returned (left-limit convention).
  std::size_t find_span(double u) const;

  /// Knot sequence with value u inserted once.
  KnotVector with_inserted(double u) const;

 private:
  int degree_;
  std::vector<double> knots_;
};

/// Strictly increasing integer sequence a_0 < ... < a_m.
class LatticeSet {
 public:
  LatticeSet() = default;
  explicit LatticeSet(std::vector<int> indices);

  /// {first, first + 1, ..., last}.
  static LatticeSet range(int first, int last);

  std::span<const int> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  int front() const { return indices_.front(); }
  int back() const { return indices_.back(); }
  int operator[](std::size_t i) const { return indices_[i]; }

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  std::vector<int> indices_;
};

/// Per-index lift exponents: index i gets weight factor t^values[i].
class LiftingFunction {
 public:
  LiftingFunction() = default;
  explicit LiftingFunction(std::vector<double> values);

  /// Same lift value on n indices.
  static LiftingFunction constant(std::size_t n, double value = 0.0);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double max_abs() const noexcept;

 private:
  std::vector<double> values_;
};

/// A NURBS curve: clamped knot vector, control points, positive weights.
/// The lattice is implicitly {0, ..., control_count() - 1}.
class CurveSpec {
 public:
  CurveSpec(KnotVector knots, std::vector<Point> points, std::vector<double> weights,
            int dimension = 2);

  const KnotVector& knot_vector() const noexcept { return knots_; }
  int degree() const noexcept { return knots_.degree(); }
  int dimension() const noexcept { return dimension_; }
  std::span<const Point> points() const noexcept { return points_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t control_count() const noexcept { return points_.size(); }
  /// Number of nonempty knot spans (Bezier pieces after extraction).
  std::size_t segment_count() const;
  LatticeSet lattice() const;
  double diameter() const { return bbox_diameter(points_); }

  /// Throws ValidationError unless lifting has one finite value per control point.
  void check_lifting(const LiftingFunction& lifting) const;

 private:
  KnotVector knots_;
  std::vector<Point> points_;
  std::vector<double> weights_;
  int dimension_;
};

/// Rational curve over a 1-D lattice subset with basis
/// c_a (x - a_0)^(a - a_0) (a_m - x)^(a_m - a).
struct ToricBezierPiece {
  LatticeSet lattice;
  std::vector<double> coeffs;
  std::vector<double> weights;
  std::vector<Point> points;

  double domain_begin() const { return lattice.front(); }
  double domain_end() const { return lattice.back(); }
};

/// All basis values N_{i,p}(u), i = 0 .. control_count - 1.
std::vector<double> bspline_basis_all(const KnotVector& kv, double u);

Point eval_nurbs(const CurveSpec& spec, double u);

/// Curve with weights t^lambda(i) w_i. Terms are rescaled by t^-max(lambda)
/// over the active support so large t does not overflow.
Point eval_nurbs_lifted(const CurveSpec& spec, const LiftingFunction& lifting, double t, double u);

Point eval_toric_bezier(const ToricBezierPiece& piece, double x);

double binomial(int n, int k);

}  // namespace toric
