#pragma once

#include <span>
#include <vector>

#include "toric/degeneration.hpp"
#include "toric/geometry.hpp"

namespace toric {

/// A curve image sampled as one or more ordered polylines. Degenerate pieces
/// appear as single-vertex strands.
struct SampledCurve {
  std::vector<std::vector<Point>> strands;

  std::size_t vertex_count() const;
  std::vector<Point> vertices() const;
};

/// Hausdorff distance between finite point sets.
double hausdorff_distance(std::span<const Point> a, std::span<const Point> b);

/// Hausdorff distance between two sampled curves: vertices of each against
/// the segments of the other. Underestimates the true set distance by at
/// most half the longest chord.
double polyline_hausdorff(const SampledCurve& a, const SampledCurve& b);

struct SamplingOptions {
  int seeds = 400;                // initial samples per curve
  double max_chord = 2e-3;        // relative to the control-point diameter
  double max_deviation = 1e-7;    // midpoint-to-chord, relative to diameter
  int max_depth = 48;
};

/// One Bezier piece of the lifted curve at a fixed t, parameterized by the
/// log-odds sigma = ln(v / (1 - v)) of the local Bezier parameter v. This
/// resolves transitions that crowd into tiny parameter intervals at large t.
struct LiftedPiece {
  int degree = 0;
  double u_begin = 0.0;
  double u_end = 0.0;
  std::vector<double> log_weights;  // ln of the refined weights at t
  std::vector<Point> points;        // refined control points at t

  Point at(double sigma) const;
  /// Knot-space parameter matching sigma.
  double knot_parameter(double sigma) const;
  /// Sigma range outside which the piece sits at its end points to ~e^-40.
  double sigma_extent() const;
};

std::vector<LiftedPiece> lifted_pieces(const CurveSpec& spec, const LiftingFunction& lifting,
                                       double t);

SampledCurve sample_lifted_curve(const CurveSpec& spec, const LiftingFunction& lifting, double t,
                                 const SamplingOptions& options = {});

/// Adaptive samples of a regular control curve, seeds per nondegenerate piece.
SampledCurve sample_limit_curve(const RegularControlCurve& rcc, int seeds_per_piece = 100,
                                const SamplingOptions& options = {});

struct ConvergenceReport {
  std::vector<double> t_values;
  std::vector<double> distances;
  double diameter = 0.0;
  double tolerance = 0.0;  // relative to diameter
  bool converged = false;      // last distance <= tolerance * diameter
  bool monotone_tail = false;  // last distance is the minimum of the last three, above a 1e-12*diameter floor
};

/// Hausdorff distance between the lifted curve and its regular control curve
/// for each t of an ascending schedule (>= 3 entries).
ConvergenceReport convergence_report(const CurveSpec& spec, const LiftingFunction& lifting,
                                     std::span<const double> t_schedule, int samples = 400,
                                     double tol = 1e-2);

struct Crossing {
  std::size_t first_segment = 0;
  std::size_t second_segment = 0;
  Point point;
};

/// Transversal crossings between nonadjacent segments of an open polyline,
/// each pair reported once (first_segment < second_segment).
std::vector<Crossing> self_intersections(std::span<const Point> polyline);

}  // namespace toric
