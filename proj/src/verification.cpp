#include "toric/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "toric/errors.hpp"
#include "toric/knot_refinement.hpp"
#include "toric/simd/distance_kernels.hpp"

namespace toric {

namespace {

constexpr double kSeedSpacing = 0.25;  // in sigma
constexpr double kSigmaMargin = 40.0;

// log(1 + e^x) without overflow.
double softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

struct Refiner {
  double max_chord;
  double max_deviation;
  double duplicate;
  int max_depth;
  std::vector<Point>* out;

  void push(const Point& p) const {
    if (out->empty() || distance(out->back(), p) > duplicate) out->push_back(p);
  }

  // Like push, but an exact point replaces a near-duplicate last sample.
  void push_exact(const Point& p) const {
    if (!out->empty() && distance(out->back(), p) <= duplicate) out->back() = p;
    else out->push_back(p);
  }

  // Appends samples in (s0, s1]; the caller has already pushed p0.
  template <class F>
  void refine(const F& f, double s0, const Point& p0, double s1, const Point& p1, int depth) const {
    const double sm = 0.5 * (s0 + s1);
    const Point pm = f(sm);
    const bool split = depth < max_depth && (distance(p0, p1) > max_chord ||
                                             distance_to_segment(pm, p0, p1) > max_deviation);
    if (!split) {
      push(p1);
      return;
    }
    refine(f, s0, p0, sm, pm, depth + 1);
    refine(f, sm, pm, s1, p1, depth + 1);
  }

  template <class F>
  void run(const F& f, double lo, double hi, int seeds) const {
    seeds = std::max(seeds, 2);
    double prev_s = lo;
    Point prev = f(lo);
    push(prev);
    for (int k = 1; k < seeds; ++k) {
      const double s = k + 1 == seeds ? hi : lo + (hi - lo) * k / (seeds - 1);
      const Point p = f(s);
      refine(f, prev_s, prev, s, p, 0);
      prev_s = s;
      prev = p;
    }
  }
};

Refiner make_refiner(const SamplingOptions& options, double diameter, std::vector<Point>& out) {
  const double d = diameter > 0.0 ? diameter : 1.0;
  return {options.max_chord * d, options.max_deviation * d, 1e-12 * d, options.max_depth, &out};
}

void add_curve(simd::SegmentBatch& segs, simd::PointBatch& verts, const SampledCurve& c) {
  for (const auto& strand : c.strands) {
    if (strand.empty()) continue;
    segs.add_polyline(strand);
    for (const Point& p : strand) verts.add(p);
  }
}

double directed_sq(const simd::PointBatch& from, const simd::SegmentBatch& to) {
  return simd::active_kernels().max_min_sq_distance(from, to);
}

}  // namespace

std::size_t SampledCurve::vertex_count() const {
  std::size_t n = 0;
  for (const auto& s : strands) n += s.size();
  return n;
}

std::vector<Point> SampledCurve::vertices() const {
  std::vector<Point> out;
  out.reserve(vertex_count());
  for (const auto& s : strands) out.insert(out.end(), s.begin(), s.end());
  return out;
}

double hausdorff_distance(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty()) throw ValidationError("Hausdorff distance of an empty set", "a");
  if (b.empty()) throw ValidationError("Hausdorff distance of an empty set", "b");
  simd::SegmentBatch sa, sb;
  for (const Point& p : a) sa.add_point(p);
  for (const Point& p : b) sb.add_point(p);
  const simd::PointBatch pa(a), pb(b);
  return std::sqrt(std::max(directed_sq(pa, sb), directed_sq(pb, sa)));
}

double polyline_hausdorff(const SampledCurve& a, const SampledCurve& b) {
  simd::SegmentBatch sa, sb;
  simd::PointBatch va, vb;
  add_curve(sa, va, a);
  add_curve(sb, vb, b);
  if (va.empty()) throw ValidationError("Hausdorff distance of an empty curve", "a");
  if (vb.empty()) throw ValidationError("Hausdorff distance of an empty curve", "b");
  return std::sqrt(std::max(directed_sq(va, sb), directed_sq(vb, sa)));
}

Point LiftedPiece::at(double sigma) const {
  if (sigma == -INFINITY) return points.front();
  if (sigma == INFINITY) return points.back();
  const double lv = -softplus(-sigma);  // ln v
  const double l1v = -softplus(sigma);  // ln(1 - v)
  std::vector<double> terms(points.size());
  double top = -INFINITY;
  for (int k = 0; k <= degree; ++k) {
    terms[k] = log_weights[k] + std::log(binomial(degree, k)) + k * lv + (degree - k) * l1v;
    top = std::max(top, terms[k]);
  }
  double den = 0.0;
  Point num;
  for (int k = 0; k <= degree; ++k) {
    const double w = std::exp(terms[k] - top);
    den += w;
    num += w * points[k];
  }
  return num * (1.0 / den);
}

double LiftedPiece::knot_parameter(double sigma) const {
  const double v = 1.0 / (1.0 + std::exp(-sigma));
  return u_begin + v * (u_end - u_begin);
}

double LiftedPiece::sigma_extent() const {
  const auto [lo, hi] = std::minmax_element(log_weights.begin(), log_weights.end());
  return (*hi - *lo) + std::log(binomial(degree, degree / 2)) + kSigmaMargin;
}

std::vector<LiftedPiece> lifted_pieces(const CurveSpec& spec, const LiftingFunction& lifting,
                                       double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive and finite", "t");
  std::vector<LiftedPiece> out;
  for (const BezierPieceExtract& piece : bezier_extract(spec)) {
    LogWeightedPoints lw = numeric_log_weights_points(piece, spec, lifting, t);
    out.push_back({piece.degree, piece.u_begin, piece.u_end, std::move(lw.log_weights),
                   std::move(lw.points)});
  }
  return out;
}

SampledCurve sample_lifted_curve(const CurveSpec& spec, const LiftingFunction& lifting, double t,
                                 const SamplingOptions& options) {
  const std::vector<LiftedPiece> pieces = lifted_pieces(spec, lifting, t);
  std::vector<Point> strand;
  const Refiner r = make_refiner(options, spec.diameter(), strand);
  const int per_piece = options.seeds / static_cast<int>(pieces.size());
  for (const LiftedPiece& piece : pieces) {
    const double s = piece.sigma_extent();
    const int seeds = std::max(per_piece, static_cast<int>(std::ceil(2.0 * s / kSeedSpacing)) + 1);
    r.push_exact(piece.points.front());
    r.run([&piece](double sigma) { return piece.at(sigma); }, -s, s, seeds);
    r.push_exact(piece.points.back());
  }
  return {{std::move(strand)}};
}

SampledCurve sample_limit_curve(const RegularControlCurve& rcc, int seeds_per_piece,
                                const SamplingOptions& options) {
  if (seeds_per_piece < 2) throw ValidationError("need at least 2 seeds per piece", "samples");
  std::vector<Point> strand;
  const Refiner r = make_refiner(options, rcc.diameter, strand);
  for (const RegularControlPiece& piece : rcc.pieces) {
    const ToricBezierPiece& c = piece.curve;
    if (piece.degenerate) {
      r.push(c.points.front());
      continue;
    }
    r.run([&c](double x) { return eval_toric_bezier(c, x); }, c.domain_begin(), c.domain_end(),
          seeds_per_piece);
  }
  return {{std::move(strand)}};
}

ConvergenceReport convergence_report(const CurveSpec& spec, const LiftingFunction& lifting,
                                     std::span<const double> t_schedule, int samples, double tol) {
  spec.check_lifting(lifting);
  if (t_schedule.size() < 3) throw ValidationError("t schedule needs at least 3 entries", "t_schedule");
  for (std::size_t i = 0; i < t_schedule.size(); ++i) {
    if (!(t_schedule[i] > 0.0) || !std::isfinite(t_schedule[i])) {
      throw DomainError("t values must be positive and finite", "t_schedule");
    }
    if (i > 0 && !(t_schedule[i] > t_schedule[i - 1])) {
      throw ValidationError("t schedule must be strictly ascending", "t_schedule");
    }
  }
  if (samples < 2) throw ValidationError("need at least 2 samples", "samples");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive", "tol");

  ConvergenceReport rep;
  rep.diameter = spec.diameter();
  rep.tolerance = tol;
  SamplingOptions opts;
  opts.seeds = samples;
  const SampledCurve limit = sample_limit_curve(regular_control_curve(spec, lifting), 100, opts);
  for (double t : t_schedule) {
    rep.t_values.push_back(t);
    rep.distances.push_back(polyline_hausdorff(sample_lifted_curve(spec, lifting, t, opts), limit));
  }
  const std::size_t n = rep.distances.size();
  rep.converged = rep.distances.back() <= tol * rep.diameter;
  // Below the noise floor the sampled distances are rounding error; treat them as equal.
  const double floor = 1e-12 * rep.diameter;
  auto level = [floor](double d) { return std::max(d, floor); };
  rep.monotone_tail =
      level(rep.distances[n - 1]) <= std::min(level(rep.distances[n - 2]), level(rep.distances[n - 3]));
  return rep;
}

std::vector<Crossing> self_intersections(std::span<const Point> polyline) {
  std::vector<Crossing> out;
  if (polyline.size() < 4) return out;
  const std::size_t segs = polyline.size() - 1;
  const bool planar = std::all_of(polyline.begin(), polyline.end(),
                                  [&](const Point& p) { return p.z == polyline.front().z; });
  const double scale = std::max(bbox_diameter(polyline), 1e-300);
  const double eps = 1e-12 * scale;

  auto lo = [&](std::size_t i) {
    const Point& a = polyline[i];
    const Point& b = polyline[i + 1];
    return Point{std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
  };
  auto hi = [&](std::size_t i) {
    const Point& a = polyline[i];
    const Point& b = polyline[i + 1];
    return Point{std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
  };
  auto cross2 = [](const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };

  for (std::size_t i = 0; i < segs; ++i) {
    const Point ilo = lo(i), ihi = hi(i);
    for (std::size_t j = i + 2; j < segs; ++j) {
      const Point jlo = lo(j), jhi = hi(j);
      if (ilo.x > jhi.x + eps || jlo.x > ihi.x + eps || ilo.y > jhi.y + eps ||
          jlo.y > ihi.y + eps || ilo.z > jhi.z + eps || jlo.z > ihi.z + eps) {
        continue;
      }
      const Point& a = polyline[i];
      const Point& b = polyline[i + 1];
      const Point& c = polyline[j];
      const Point& d = polyline[j + 1];
      if (planar) {
        const double d1 = cross2(a, b, c), d2 = cross2(a, b, d);
        const double d3 = cross2(c, d, a), d4 = cross2(c, d, b);
        // Strict sign changes on both segments: a proper crossing.
        if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
          const double s = d3 / (d3 - d4);
          out.push_back({i, j, a + s * (b - a)});
        }
        continue;
      }
      // Closest approach of the two segment lines.
      const Point u = b - a, v = d - c, w = a - c;
      const double uu = dot(u, u), uv = dot(u, v), vv = dot(v, v);
      const double den = uu * vv - uv * uv;
      if (den <= 1e-24 * uu * vv) continue;  // parallel
      const double s = (uv * dot(v, w) - vv * dot(u, w)) / den;
      const double r = (uu * dot(v, w) - uv * dot(u, w)) / den;
      if (s <= 0.0 || s >= 1.0 || r <= 0.0 || r >= 1.0) continue;
      const Point p = a + s * u;
      if (distance(p, c + r * v) <= eps) out.push_back({i, j, p});
    }
  }
  return out;
}

}  // namespace toric
