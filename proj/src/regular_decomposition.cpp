#include "toric/regular_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toric/knot_refinement.hpp"

namespace toric {

namespace {

// Vertical gap of point c below the line through a and b (positive = below).
double gap_below(const LiftedPoint& a, const LiftedPoint& b, const LiftedPoint& c) {
  const double s = (c.x - a.x) / (b.x - a.x);
  return (a.lift + s * (b.lift - a.lift)) - c.lift;
}

}  // namespace

LiftedConfiguration::LiftedConfiguration(std::vector<LiftedPoint> points)
    : points_(std::move(points)) {
  double top = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].lift)) {
      throw ValidationError("lifted points must be finite", "lifting");
    }
    if (i > 0 && !(points_[i].x > points_[i - 1].x)) {
      throw ValidationError("lifted abscissas must be strictly increasing", "lattice");
    }
    top = std::max(top, std::abs(points_[i].lift));
  }
  tolerance_ = 1e-9 * (1.0 + top);
}

LiftedConfiguration::LiftedConfiguration(const LatticeSet& lattice, std::span<const double> lifts)
    : LiftedConfiguration([&] {
        if (lifts.size() != lattice.size()) {
          throw ValidationError("lifting length does not match lattice size", "lifting");
        }
        std::vector<LiftedPoint> pts;
        for (std::size_t i = 0; i < lifts.size(); ++i) {
          pts.push_back({static_cast<double>(lattice[i]), lifts[i]});
        }
        return pts;
      }()) {}

std::vector<UpperEdge> upper_hull(const LiftedConfiguration& config) {
  const auto pts = config.points();
  if (pts.size() < 2) throw DegenerateError("upper hull needs at least two lifted points");
  const double tol = config.tolerance();

  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (chain.size() >= 2 &&
           gap_below(pts[chain[chain.size() - 2]], pts[i], pts[chain.back()]) >= -tol) {
      chain.pop_back();
    }
    chain.push_back(i);
  }

  std::vector<UpperEdge> edges;
  for (std::size_t k = 1; k < chain.size(); ++k) edges.push_back({chain[k - 1], chain[k]});
  return edges;
}

RegularDecomposition regular_decomposition(const LatticeSet& lattice,
                                           const LiftingFunction& lifting) {
  const LiftedConfiguration config(lattice, lifting.values());
  const auto pts = config.points();
  RegularDecomposition out;
  for (const UpperEdge& e : upper_hull(config)) {
    std::vector<int> members;
    for (std::size_t j = e.left; j <= e.right; ++j) {
      if (j == e.left || j == e.right ||
          std::abs(gap_below(pts[e.left], pts[e.right], pts[j])) <= config.tolerance()) {
        members.push_back(lattice[j]);
      }
    }
    out.subsets.emplace_back(std::move(members));
    out.cells.emplace_back(pts[e.left].x, pts[e.right].x);
  }
  return out;
}

NurbsRegularDecomposition nurbs_regular_decomposition(const CurveSpec& spec,
                                                      const LiftingFunction& lifting) {
  spec.check_lifting(lifting);
  NurbsRegularDecomposition out;
  for (const BezierPieceExtract& piece : bezier_extract(spec)) {
    PieceDecomposition pd;
    pd.piece_index = piece.piece_index;
    for (const SupportCombination& c : piece.combos) pd.lifts.push_back(support_exponent(c, lifting));
    pd.decomposition = regular_decomposition(piece.lattice(), LiftingFunction(pd.lifts));
    out.per_piece.push_back(std::move(pd));
  }
  return out;
}

std::string format_subsets(const RegularDecomposition& decomposition) {
  std::ostringstream os;
  os << '{';
  for (std::size_t s = 0; s < decomposition.subsets.size(); ++s) {
    if (s) os << ',';
    os << '{';
    const auto idx = decomposition.subsets[s].indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) os << ',';
      os << idx[i];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

std::string format_decomposition(const NurbsRegularDecomposition& decomposition) {
  std::string out;
  for (std::size_t m = 0; m < decomposition.per_piece.size(); ++m) {
    if (m) out += " | ";
    out += format_subsets(decomposition.per_piece[m].decomposition);
  }
  return out;
}

}  // namespace toric
