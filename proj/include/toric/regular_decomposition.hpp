#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric/geometry.hpp"

namespace toric {

struct LiftedPoint {
  double x = 0.0;
  double lift = 0.0;
};

/// Lattice points lifted to (a_i, lambda(a_i)); abscissas strictly increasing.
class LiftedConfiguration {
 public:
  explicit LiftedConfiguration(std::vector<LiftedPoint> points);
  LiftedConfiguration(const LatticeSet& lattice, std::span<const double> lifts);

  std::span<const LiftedPoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  /// Vertical on-edge tolerance: 1e-9 * (1 + max |lift|).
  double tolerance() const noexcept { return tolerance_; }

 private:
  std::vector<LiftedPoint> points_;
  double tolerance_ = 0.0;
};

/// Upper hull edge between configuration indices left < right.
struct UpperEdge {
  std::size_t left = 0;
  std::size_t right = 0;
  friend bool operator==(const UpperEdge&, const UpperEdge&) = default;
};

/// Upper envelope of the lifted hull, left to right. Points lying on an edge
/// within tolerance() are not hull vertices.
std::vector<UpperEdge> upper_hull(const LiftedConfiguration& config);

struct RegularDecomposition {
  std::vector<LatticeSet> subsets;
  std::vector<std::pair<double, double>> cells;
};

/// Subsets of lattice points whose lifts lie on a common upper edge.
RegularDecomposition regular_decomposition(const LatticeSet& lattice,
                                           const LiftingFunction& lifting);

struct PieceDecomposition {
  int piece_index = 0;           // 1-based Bezier piece
  std::vector<double> lifts;     // induced lift per refined index of the piece
  RegularDecomposition decomposition;  // subsets in global refined indices
};

struct NurbsRegularDecomposition {
  std::vector<PieceDecomposition> per_piece;
};

NurbsRegularDecomposition nurbs_regular_decomposition(const CurveSpec& spec,
                                                      const LiftingFunction& lifting);

/// "{{0,1},{1,2}} | {{2,3,4}}"
std::string format_subsets(const RegularDecomposition& decomposition);
std::string format_decomposition(const NurbsRegularDecomposition& decomposition);

}  // namespace toric
