#include "toric/knot_refinement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace toric {

namespace {

constexpr double kPruneThreshold = 1e-14;

// Homogeneous control data for one combination, with all lifts rescaled by
// t^-top so nothing overflows; log_scale = top * ln t restores the true weight.
struct ScaledControl {
  double weight;
  Point point;
  double log_scale;
};

ScaledControl scaled_control(const SupportCombination& combo, const CurveSpec& spec,
                             const LiftingFunction* lifting, double t) {
  const double log_t = lifting ? std::log(t) : 0.0;
  double top = 0.0;
  if (lifting) {
    top = -INFINITY;
    for (const SupportTerm& term : combo.terms()) top = std::max(top, (*lifting)[term.index]);
  }
  double w = 0.0;
  Point num;
  for (const SupportTerm& term : combo.terms()) {
    const double lift = lifting ? std::exp(((*lifting)[term.index] - top) * log_t) : 1.0;
    const double wi = term.coeff * lift * spec.weights()[term.index];
    w += wi;
    num += wi * spec.points()[term.index];
  }
  return {w, num * (1.0 / w), top * log_t};
}

}  // namespace

SupportCombination SupportCombination::singleton(int index) {
  SupportCombination c;
  c.terms_.push_back({index, 1.0});
  return c;
}

SupportCombination SupportCombination::mix(const SupportCombination& left,
                                           const SupportCombination& right, double alpha) {
  std::map<int, double> acc;
  for (const SupportTerm& t : left.terms_) acc[t.index] += (1.0 - alpha) * t.coeff;
  for (const SupportTerm& t : right.terms_) acc[t.index] += alpha * t.coeff;
  SupportCombination out;
  double total = 0.0;
  for (const auto& [index, coeff] : acc) {
    if (coeff >= kPruneThreshold) {
      out.terms_.push_back({index, coeff});
      total += coeff;
    }
  }
  for (SupportTerm& t : out.terms_) t.coeff /= total;
  return out;
}

double SupportCombination::coefficient(int index) const {
  for (const SupportTerm& t : terms_) {
    if (t.index == index) return t.coeff;
  }
  return 0.0;
}

double SupportCombination::sum() const {
  double s = 0.0;
  for (const SupportTerm& t : terms_) s += t.coeff;
  return s;
}

RefinedCurve initial_refinement(const CurveSpec& spec) {
  std::vector<SupportCombination> combos;
  combos.reserve(spec.control_count());
  for (std::size_t i = 0; i < spec.control_count(); ++i) {
    combos.push_back(SupportCombination::singleton(static_cast<int>(i)));
  }
  return {spec.knot_vector(), std::move(combos), spec};
}

RefinedCurve insert_knot(const RefinedCurve& state, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw ValidationError("inserted knot must lie strictly inside (0, 1)", "knot");
  }
  const KnotVector& kv = state.knots;
  const int p = kv.degree();
  const int s = kv.multiplicity(u);
  if (s + 1 > p) {
    throw ValidationError("inserting " + std::to_string(u) + " would exceed multiplicity " +
                              std::to_string(p),
                          "knot");
  }
  const int k = static_cast<int>(kv.find_span(u));
  const int count = static_cast<int>(state.combos.size());

  std::vector<SupportCombination> next;
  next.reserve(count + 1);
  for (int i = 0; i <= k - p; ++i) next.push_back(state.combos[i]);
  for (int i = k - p + 1; i <= k - s; ++i) {
    const double alpha = (u - kv[i]) / (kv[i + p] - kv[i]);
    next.push_back(SupportCombination::mix(state.combos[i - 1], state.combos[i], alpha));
  }
  for (int i = k - s + 1; i <= count; ++i) next.push_back(state.combos[i - 1]);

  return {kv.with_inserted(u), std::move(next), state.source};
}

CurveSpec materialize(const RefinedCurve& state) {
  std::vector<Point> pts;
  std::vector<double> ws;
  for (const SupportCombination& c : state.combos) {
    const ScaledControl sc = scaled_control(c, state.source, nullptr, 1.0);
    pts.push_back(sc.point);
    ws.push_back(sc.weight);
  }
  return CurveSpec(state.knots, std::move(pts), std::move(ws), state.source.dimension());
}

CurveSpec materialize(const RefinedCurve& state, const LiftingFunction& lifting, double t) {
  state.source.check_lifting(lifting);
  if (!(t > 0.0)) throw DomainError("t must be positive", "t");
  std::vector<Point> pts;
  std::vector<double> ws;
  for (const SupportCombination& c : state.combos) {
    const ScaledControl sc = scaled_control(c, state.source, &lifting, t);
    pts.push_back(sc.point);
    ws.push_back(sc.weight * std::exp(sc.log_scale));
  }
  return CurveSpec(state.knots, std::move(pts), std::move(ws), state.source.dimension());
}

std::vector<double> extraction_insertions(const CurveSpec& spec) {
  const KnotVector& kv = spec.knot_vector();
  std::vector<double> out;
  for (double u : kv.distinct_interior()) {
    for (int m = kv.multiplicity(u); m < kv.degree(); ++m) out.push_back(u);
  }
  return out;
}

RefinedCurve refine_to_bezier(const CurveSpec& spec, std::span<const double> insertions) {
  RefinedCurve state = initial_refinement(spec);
  for (double u : insertions) state = insert_knot(state, u);
  for (double u : state.knots.distinct_interior()) {
    if (state.knots.multiplicity(u) != state.knots.degree()) {
      throw ValidationError("insertion sequence leaves knot " + std::to_string(u) +
                                " below full multiplicity",
                            "insertions");
    }
  }
  return state;
}

std::vector<BezierPieceExtract> split_pieces(const RefinedCurve& refined) {
  const KnotVector& kv = refined.knots;
  const int p = kv.degree();
  std::vector<double> breaks{0.0};
  for (double u : kv.distinct_interior()) {
    if (kv.multiplicity(u) != p) {
      throw ValidationError("curve is not fully refined at knot " + std::to_string(u), "knots");
    }
    breaks.push_back(u);
  }
  breaks.push_back(1.0);
  const int pieces = static_cast<int>(breaks.size()) - 1;

  std::vector<BezierPieceExtract> out;
  out.reserve(pieces);
  for (int m = 1; m <= pieces; ++m) {
    BezierPieceExtract piece;
    piece.piece_index = m;
    piece.degree = p;
    piece.u_begin = breaks[m - 1];
    piece.u_end = breaks[m];
    for (int j = (m - 1) * p; j <= m * p; ++j) piece.combos.push_back(refined.combos[j]);
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<BezierPieceExtract> bezier_extract(const CurveSpec& spec) {
  const std::vector<double> ins = extraction_insertions(spec);
  return bezier_extract(spec, ins);
}

std::vector<BezierPieceExtract> bezier_extract(const CurveSpec& spec,
                                               std::span<const double> insertions) {
  return split_pieces(refine_to_bezier(spec, insertions));
}

WeightedPoints numeric_weights_points(const BezierPieceExtract& piece, const CurveSpec& spec,
                                      const LiftingFunction& lifting, double t) {
  spec.check_lifting(lifting);
  if (!(t > 0.0)) throw DomainError("t must be positive", "t");
  WeightedPoints out;
  for (const SupportCombination& c : piece.combos) {
    const ScaledControl sc = scaled_control(c, spec, &lifting, t);
    out.weights.push_back(sc.weight * std::exp(sc.log_scale));
    out.points.push_back(sc.point);
  }
  return out;
}

LogWeightedPoints numeric_log_weights_points(const BezierPieceExtract& piece,
                                             const CurveSpec& spec,
                                             const LiftingFunction& lifting, double t) {
  spec.check_lifting(lifting);
  if (!(t > 0.0)) throw DomainError("t must be positive", "t");
  LogWeightedPoints out;
  for (const SupportCombination& c : piece.combos) {
    const ScaledControl sc = scaled_control(c, spec, &lifting, t);
    out.log_weights.push_back(std::log(sc.weight) + sc.log_scale);
    out.points.push_back(sc.point);
  }
  return out;
}

double support_exponent(const SupportCombination& combo, const LiftingFunction& lifting) {
  if (combo.empty()) throw ValidationError("empty support combination", "combo");
  double top = -INFINITY;
  for (const SupportTerm& t : combo.terms()) top = std::max(top, lifting[t.index]);
  return top;
}

}  // namespace toric
