#pragma once

#include <span>
#include <vector>

#include "toric/geometry.hpp"

namespace toric {

struct SupportTerm {
  int index = 0;
  double coeff = 0.0;
  friend bool operator==(const SupportTerm&, const SupportTerm&) = default;
};

/// Convex combination over original control indices.
///
/// A refined homogeneous control point equals sum_i f_i t^lambda(i) w_i (P_i, 1).
/// Knot insertion only mixes the f_i, so the combination is exact for every
/// weight and lift assignment at once.
class SupportCombination {
 public:
  SupportCombination() = default;
  static SupportCombination singleton(int index);

  /// (1 - alpha) * left + alpha * right; entries below 1e-14 are dropped and
  /// the remainder renormalized.
  static SupportCombination mix(const SupportCombination& left, const SupportCombination& right,
                                double alpha);

  std::span<const SupportTerm> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  int first_index() const { return terms_.front().index; }
  int last_index() const { return terms_.back().index; }
  /// f_i, 0 when i is outside the support.
  double coefficient(int index) const;
  double sum() const;

 private:
  std::vector<SupportTerm> terms_;  // ascending index
};

/// A knot-refined curve whose control data are combinations of the source's.
struct RefinedCurve {
  KnotVector knots;
  std::vector<SupportCombination> combos;
  CurveSpec source;
};

/// Unrefined state: the source knots and identity combinations.
RefinedCurve initial_refinement(const CurveSpec& spec);

/// Boehm single-knot insertion. Rejects u at 0 or 1 and insertions that push
/// an interior multiplicity above the degree.
RefinedCurve insert_knot(const RefinedCurve& state, double u);

/// Numeric NURBS equivalent to the refined state (source weights, optionally lifted).
CurveSpec materialize(const RefinedCurve& state);
CurveSpec materialize(const RefinedCurve& state, const LiftingFunction& lifting, double t);

/// One rational Bezier piece of a fully extracted curve.
struct BezierPieceExtract {
  int piece_index = 0;  // 1-based
  int degree = 0;
  std::vector<SupportCombination> combos;  // degree + 1 entries
  double u_begin = 0.0;
  double u_end = 0.0;

  int lattice_begin() const { return (piece_index - 1) * degree; }
  int lattice_end() const { return piece_index * degree; }
  LatticeSet lattice() const { return LatticeSet::range(lattice_begin(), lattice_end()); }
};

/// Knot values to insert (with repetition) so that every interior knot has
/// multiplicity equal to the degree, in ascending order.
std::vector<double> extraction_insertions(const CurveSpec& spec);

/// Refines with the given insertion sequence; it must raise every interior
/// knot to full multiplicity, in any order.
RefinedCurve refine_to_bezier(const CurveSpec& spec, std::span<const double> insertions);

/// Splits a fully refined curve into its Bezier pieces.
std::vector<BezierPieceExtract> split_pieces(const RefinedCurve& refined);

std::vector<BezierPieceExtract> bezier_extract(const CurveSpec& spec);
std::vector<BezierPieceExtract> bezier_extract(const CurveSpec& spec,
                                               std::span<const double> insertions);

struct WeightedPoints {
  std::vector<double> weights;
  std::vector<Point> points;
};

/// Piece weights sum_i f_i t^lambda(i) w_i and points (weighted average of P_i).
WeightedPoints numeric_weights_points(const BezierPieceExtract& piece, const CurveSpec& spec,
                                      const LiftingFunction& lifting, double t);

/// Same data with weights as natural logs, safe for any t and lift range.
struct LogWeightedPoints {
  std::vector<double> log_weights;
  std::vector<Point> points;
};

LogWeightedPoints numeric_log_weights_points(const BezierPieceExtract& piece,
                                             const CurveSpec& spec,
                                             const LiftingFunction& lifting, double t);

/// Largest lift over the combination's support.
double support_exponent(const SupportCombination& combo, const LiftingFunction& lifting);

}  // namespace toric
