#pragma once

#include <span>
#include <vector>

#include "toric/geometry.hpp"
#include "toric/knot_refinement.hpp"
#include "toric/regular_decomposition.hpp"

namespace toric {

/// t -> infinity limit of one refined control point and its weight.
struct LimitElement {
  Point point;
  double weight = 0.0;
  std::vector<int> support;  // argmax set of the lift over the combination
};

LimitElement limit_element(const SupportCombination& combo, const LiftingFunction& lifting,
                           std::span<const double> weights, std::span<const Point> points);

struct RegularControlPiece {
  int bezier_piece = 0;  // 1-based piece of the extraction this came from
  ToricBezierPiece curve;
  bool degenerate = false;  // all control points coincide
};

/// Union of toric Bezier pieces, ordered left to right.
struct RegularControlCurve {
  std::vector<RegularControlPiece> pieces;
  double diameter = 0.0;  // of the source control points
};

RegularControlCurve regular_control_curve(const CurveSpec& spec, const LiftingFunction& lifting);

/// samples_per_piece uniform parameters per nondegenerate piece, one point per
/// degenerate piece; consecutive duplicates are dropped.
std::vector<Point> sample_regular_control_curve(const RegularControlCurve& rcc,
                                                int samples_per_piece);

}  // namespace toric
