#include "toric/degeneration.hpp"

#include <algorithm>
#include <cmath>

namespace toric {

LimitElement limit_element(const SupportCombination& combo, const LiftingFunction& lifting,
                           std::span<const double> weights, std::span<const Point> points) {
  if (combo.empty()) throw ValidationError("empty support combination", "combo");
  const double top = support_exponent(combo, lifting);
  // Same scale as the hull on-edge tolerance so argmax ties and edge
  // membership agree.
  const double tol = 1e-9 * (1.0 + lifting.max_abs());

  LimitElement out;
  Point num;
  for (const SupportTerm& term : combo.terms()) {
    if (lifting[term.index] < top - tol) continue;
    const double w = term.coeff * weights[term.index];
    out.support.push_back(term.index);
    out.weight += w;
    num += w * points[term.index];
  }
  // A single surviving index is returned exactly rather than via w*P/w.
  out.point = out.support.size() == 1 ? points[out.support.front()] : num * (1.0 / out.weight);
  return out;
}

RegularControlCurve regular_control_curve(const CurveSpec& spec, const LiftingFunction& lifting) {
  spec.check_lifting(lifting);
  const int p = spec.degree();
  const std::vector<BezierPieceExtract> pieces = bezier_extract(spec);
  const NurbsRegularDecomposition decomposition = nurbs_regular_decomposition(spec, lifting);

  RegularControlCurve out;
  out.diameter = spec.diameter();
  const double coincident = 1e-9 * out.diameter;

  for (std::size_t m = 0; m < pieces.size(); ++m) {
    const BezierPieceExtract& piece = pieces[m];
    const int base = piece.lattice_begin();
    std::vector<LimitElement> limits;
    for (const SupportCombination& c : piece.combos) {
      limits.push_back(limit_element(c, lifting, spec.weights(), spec.points()));
    }
    for (const LatticeSet& subset : decomposition.per_piece[m].decomposition.subsets) {
      RegularControlPiece rp;
      rp.bezier_piece = piece.piece_index;
      rp.curve.lattice = subset;
      for (int a : subset.indices()) {
        const LimitElement& e = limits[a - base];
        // Coefficients of the enclosing Bezier piece restricted to the subset;
        // these are the terms that survive in the limit.
        rp.curve.coeffs.push_back(binomial(p, a - base));
        rp.curve.weights.push_back(e.weight);
        rp.curve.points.push_back(e.point);
      }
      rp.degenerate = std::all_of(rp.curve.points.begin(), rp.curve.points.end(),
                                  [&](const Point& q) {
                                    return distance(q, rp.curve.points.front()) <= coincident;
                                  });
      out.pieces.push_back(std::move(rp));
    }
  }
  return out;
}

std::vector<Point> sample_regular_control_curve(const RegularControlCurve& rcc,
                                                int samples_per_piece) {
  if (samples_per_piece < 2) throw ValidationError("need at least 2 samples per piece", "samples");
  const double dup = 1e-12 * std::max(rcc.diameter, 1.0);
  std::vector<Point> out;
  auto emit = [&](const Point& q) {
    if (out.empty() || distance(out.back(), q) > dup) out.push_back(q);
  };
  for (const RegularControlPiece& piece : rcc.pieces) {
    if (piece.degenerate) {
      emit(piece.curve.points.front());
      continue;
    }
    const double a = piece.curve.domain_begin();
    const double b = piece.curve.domain_end();
    for (int k = 0; k < samples_per_piece; ++k) {
      const double x = k + 1 == samples_per_piece
                           ? b
                           : a + (b - a) * static_cast<double>(k) / (samples_per_piece - 1);
      emit(eval_toric_bezier(piece.curve, x));
    }
  }
  return out;
}

}  // namespace toric
