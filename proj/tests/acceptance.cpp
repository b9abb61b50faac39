// Acceptance checks: one PASS/FAIL line per criterion. Tolerances are fixed
// here; the exit status is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toric/degeneration.hpp"
#include "toric/knot_refinement.hpp"
#include "toric/regular_decomposition.hpp"
#include "toric/verification.hpp"

using namespace toric;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;
int known_red_failures = 0;
std::vector<std::string> known_red;
std::vector<std::string> failed;

bool is_known_red(const char* name) {
  return std::find(known_red.begin(), known_red.end(), name) != known_red.end();
}

void report(bool ok, const char* name, const std::string& detail) {
  std::printf("%s  %-34s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
  if (!ok) failed.emplace_back(name);
  known_red_failures += !ok && is_known_red(name);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<int>> subsets_of(const RegularDecomposition& d) {
  std::vector<std::vector<int>> out;
  for (const LatticeSet& s : d.subsets) out.emplace_back(s.indices().begin(), s.indices().end());
  return out;
}

SampledCurve polyline(std::vector<Point> pts) { return SampledCurve{{std::move(pts)}}; }

const std::vector<Point> kFivePoints{{0, 0}, {1, 2}, {2.5, 2.5}, {4, 1}, {5, -0.5}};

CurveSpec three_span() {
  return CurveSpec(KnotVector(2, {0, 0, 0, 0.25, 0.75, 1, 1, 1}), kFivePoints, {3, 2, 3, 2, 5});
}

CurveSpec single_knot() {
  return CurveSpec(KnotVector(2, {0, 0, 0, 0.25, 1, 1, 1}), {{0, 0}, {1, 2}, {3, 2}, {4, 0}},
                   {3, 1, 2, 2});
}

CurveSpec cubic() {
  return CurveSpec(KnotVector(3, {0, 0, 0, 0, 1.0 / 3, 1, 1, 1, 1}),
                   {{0, 0}, {1, 2}, {2.5, 2.5}, {4, 1.5}, {5, 0}}, {1, 4, 1, 4, 1});
}

void lattice_decomposition() {
  const LatticeSet lattice = LatticeSet::range(0, 4);
  const LiftingFunction l1({2, 3, 4, 3, 2}), l2({2, 3, 4, 2, 3});
  bool ok = true;
  // Warm up once, then time the pair.
  ok &= subsets_of(regular_decomposition(lattice, l1)) == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}};
  constexpr int kRuns = 1000;
  const auto t0 = Clock::now();
  for (int r = 0; r < kRuns; ++r) {
    ok &= subsets_of(regular_decomposition(lattice, l1)) == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}};
    ok &= subsets_of(regular_decomposition(lattice, l2)) == std::vector<std::vector<int>>{{0, 1, 2}, {2, 4}};
  }
  const double ms = seconds_since(t0) * 1e3 / kRuns;
  report(ok && ms < 1.0, "lattice decompositions", fmt("exact=%g  runtime=%.4f ms (< 1 ms)", ok, ms));
}

void single_knot_decompositions() {
  const CurveSpec spec = single_knot();
  const std::string a = format_decomposition(nurbs_regular_decomposition(spec, LiftingFunction({1, 3, 2, 1})));
  const LiftingFunction l2({1, 3, 2, 0});
  const std::string b = format_decomposition(nurbs_regular_decomposition(spec, l2));
  const RegularControlCurve rcc = regular_control_curve(spec, l2);
  double worst = 0.0;
  const std::vector<Point> poly(spec.points().begin(), spec.points().end());
  for (const Point& q : sample_regular_control_curve(rcc, 200)) {
    double best = INFINITY;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
      best = std::min(best, distance_to_segment(q, poly[i], poly[i + 1]));
    }
    worst = std::max(worst, best);
  }
  const double rel = worst / spec.diameter();
  const bool ok = a == "{{0,1},{1,2}} | {{2,3,4}}" && b == "{{0,1},{1,2}} | {{2,3},{3,4}}" && rel <= 1e-9;
  report(ok, "single-knot quadratic", a + " ; " + b + fmt("  polygon dev=%.2e D (<= 1e-9)", rel));
}

void three_span_limit() {
  const CurveSpec spec = three_span();
  const RefinedCurve r = refine_to_bezier(spec, extraction_insertions(spec));
  const double e1 = std::max(std::abs(r.combos[2].coefficient(1) - 2.0 / 3),
                             std::abs(r.combos[2].coefficient(2) - 1.0 / 3));
  const double e2 = std::max(std::abs(r.combos[4].coefficient(2) - 1.0 / 3),
                             std::abs(r.combos[4].coefficient(3) - 2.0 / 3));
  const RegularControlCurve rcc = regular_control_curve(spec, LiftingFunction({1, 2, 3, 2, 1}));
  double we = INFINITY;
  bool shape = rcc.pieces.size() == 3;
  if (shape) {
    const double a[] = {3, 2, 1}, b[] = {1, 2, 5};
    we = 0.0;
    for (int k = 0; k < 3; ++k) {
      we = std::max(we, std::abs(rcc.pieces[0].curve.weights[k] - a[k]));
      we = std::max(we, std::abs(rcc.pieces[2].curve.weights[k] - b[k]));
    }
    shape = rcc.pieces[1].degenerate && rcc.pieces[1].curve.points.front() == spec.points()[2] &&
            !rcc.pieces[0].degenerate && !rcc.pieces[2].degenerate;
  }
  const double err = std::max({e1, e2, we});
  report(shape && err <= 1e-12, "three-span quadratic limit",
         fmt("coeff/weight err=%.2e (<= 1e-12)  middle degenerate at P2=%g", err, shape));
}

void plateau_limit() {
  const CurveSpec spec = three_span();
  const LiftingFunction lift({1, 4, 4, 1, 1});
  const auto pieces = bezier_extract(spec);
  const LimitElement e = limit_element(pieces[0].combos[2], lift, spec.weights(), spec.points());
  // Barycentric coefficients of the limit point over P1, P2.
  const double c1 = pieces[0].combos[2].coefficient(1) * spec.weights()[1] / e.weight;
  const double c2 = pieces[0].combos[2].coefficient(2) * spec.weights()[2] / e.weight;
  const double ce = std::max(std::abs(c1 - 4.0 / 7), std::abs(c2 - 3.0 / 7));
  const double we = std::abs(e.weight - 7.0 / 3);
  const Point expect = (4.0 / 7) * spec.points()[1] + (3.0 / 7) * spec.points()[2];
  const double pe = distance(e.point, expect);

  const auto& P = spec.points();
  const RegularControlCurve rcc = regular_control_curve(spec, lift);
  const double h = polyline_hausdorff(polyline(sample_regular_control_curve(rcc, 100)),
                                      polyline({P[0], P[1], P[2], P[4]})) / spec.diameter();
  const bool ok = ce <= 1e-12 && we <= 1e-12 && pe <= 1e-12 * spec.diameter() &&
                  e.support == std::vector<int>{1, 2} && h <= 1e-9;
  report(ok, "plateau-lift limit",
         fmt("coeff err=%.2e weight err=%.2e  image vs P0P1P2P4=%.2e D", ce, we, h));
}

void cubic_limit() {
  const CurveSpec spec = cubic();
  const LiftingFunction lift({1, 4, 2, 1, 1});
  const std::string s = format_decomposition(nurbs_regular_decomposition(spec, lift));
  const auto& P = spec.points();
  const double h = polyline_hausdorff(
                       polyline(sample_regular_control_curve(regular_control_curve(spec, lift), 100)),
                       polyline({P[0], P[1], P[4]})) /
                   spec.diameter();
  report(s == "{{0,1},{1,2,3}} | {{3,6}}" && h <= 1e-9, "cubic two-segment limit",
         s + fmt("  image vs P0P1P4=%.2e D (<= 1e-9)", h));
}

void random_convergence() {
  std::mt19937_64 rng(20240501);
  const std::vector<double> schedule{10, 1e2, 1e3, 1e4};
  int pass = 0;
  double worst = 0.0;
    const auto t0 = Clock::now();
  constexpr int kSpecs = 50;
  for (int k = 0; k < kSpecs; ++k) {
    const CurveSpec spec = oracle::random_spec(rng, 4, 6);
    const LiftingFunction lift = oracle::random_lifting(rng, spec.control_count(), 0, 4);
    const ConvergenceReport r = convergence_report(spec, lift, schedule, 400, 1e-2);
    const double rel = r.distances.back() / r.diameter;
    const bool below = r.monotone_tail;
    worst = std::max(worst, rel);
    if (rel <= 1e-2 && below) {
      ++pass;
    } else {
      std::printf("      spec %d: p=%d spans=%zu lifting=[", k, spec.degree(), spec.segment_count());
      for (std::size_t i = 0; i < lift.size(); ++i) std::printf("%s%g", i ? "," : "", lift[i]);
      std::printf("]  d(10)=%.3e D  d(1e4)=%.3e D\n", r.distances.front() / r.diameter, rel);
    }
  }
  const double secs = seconds_since(t0);
  report(pass == kSpecs && secs < 60.0, "random-spec convergence",
         fmt("%g/50 converged, worst d(1e4)=%.3e D (<= 1e-2)", pass, worst) +
             fmt("  runtime=%.1f s (< 60 s)", secs));
}

void insertion_invariance() {
  std::mt19937_64 rng(777);
  double eval_err = 0.0, order_err = 0.0;
  std::vector<CurveSpec> specs{three_span(), single_knot(), cubic()};
  for (int k = 0; k < 30; ++k) specs.push_back(oracle::random_spec(rng, 5, 6));
  bool same_support = true;
  for (const CurveSpec& spec : specs) {
    std::vector<double> ins = extraction_insertions(spec);
    const RefinedCurve base = refine_to_bezier(spec, ins);
    const CurveSpec refined = materialize(base);
    for (int s = 0; s < 500; ++s) {
      const double u = s / 499.0;
      eval_err = std::max(eval_err, distance(eval_nurbs(refined, u), eval_nurbs(spec, u)) / spec.diameter());
    }
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(ins.begin(), ins.end(), rng);
      const RefinedCurve other = refine_to_bezier(spec, ins);
      for (std::size_t i = 0; i < base.combos.size(); ++i) {
        same_support &= base.combos[i].terms().size() == other.combos[i].terms().size();
        for (const SupportTerm& t : base.combos[i].terms()) {
          order_err = std::max(order_err, std::abs(t.coeff - other.combos[i].coefficient(t.index)));
        }
      }
    }
  }
  report(eval_err <= 1e-10 && order_err <= 1e-12 && same_support, "knot-insertion invariance",
         fmt("curve err=%.2e D (<= 1e-10)  order err=%.2e (<= 1e-12)", eval_err, order_err));
}

void stochasticity() {
  std::mt19937_64 rng(778);
  double unity = 0.0, sum_err = 0.0;
  bool nonneg = true;
  std::vector<CurveSpec> specs{three_span(), single_knot(), cubic()};
  for (int k = 0; k < 30; ++k) specs.push_back(oracle::random_spec(rng, 5, 6));
  for (const CurveSpec& spec : specs) {
    for (int s = 0; s < 1000; ++s) {
      double sum = 0.0;
      for (double n : bspline_basis_all(spec.knot_vector(), s / 999.0)) {
        nonneg &= n >= 0.0;
        sum += n;
      }
      unity = std::max(unity, std::abs(sum - 1.0));
    }
    RefinedCurve state = initial_refinement(spec);
    for (double u : extraction_insertions(spec)) {
      state = insert_knot(state, u);
      for (const SupportCombination& c : state.combos) {
        double total = 0.0;
        for (const SupportTerm& t : c.terms()) {
          nonneg &= t.coeff >= 0.0;
          total += t.coeff;
        }
        sum_err = std::max(sum_err, std::abs(total - 1.0));
      }
    }
  }
  report(unity <= 1e-12 && sum_err <= 1e-12 && nonneg, "partition of unity / stochastic f",
         fmt("basis err=%.2e  combo sum err=%.2e (<= 1e-12)  nonnegative=%g", unity, sum_err, nonneg));
}

void single_weight() {
  // Unit spike at each control point of the three-span quadratic; the curve
  // is sampled at 400 uniform parameters and the samples strictly inside the
  // influence span (u_i, u_{i+p+1}) are compared with P_i.
  const CurveSpec spec = three_span();
  const KnotVector& kv = spec.knot_vector();
  const int p = spec.degree();
  const double t = 1e4;
  double worst = 0.0;
  double worst_u = 0.0;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < spec.control_count(); ++i) {
    std::vector<double> v(spec.control_count(), 0.0);
    v[i] = 1.0;
    const LiftingFunction lift(v);
    for (int s = 0; s < 400; ++s) {
      const double u = s / 399.0;
      if (!(u > kv[i] && u < kv[i + p + 1])) continue;
      const double d = distance(eval_nurbs_lifted(spec, lift, t, u), spec.points()[i]) / spec.diameter();
      if (d > worst) {
        worst = d;
        worst_u = u;
        worst_i = i;
      }
    }
  }
  report(worst <= 1e-2, "single-weight spike",
         fmt("max dist to P_i=%.3e D (<= 1e-2) at i=%g u=%.4f", worst, static_cast<double>(worst_i),
             worst_u));
}

void hull_oracle() {
  // Every lattice inside {0..7} containing 0 (others are translates) of
  // size 2..7, with every integer lift assignment in [0, 5].
  long cases = 0, mismatches = 0;
  const auto t0 = Clock::now();
  for (int mask = 1; mask < (1 << 8); mask += 2) {
    std::vector<int> xs;
    for (int b = 0; b < 8; ++b) {
      if (mask & (1 << b)) xs.push_back(b);
    }
    const int n = static_cast<int>(xs.size());
    if (n < 2 || n > 7) continue;
    const LatticeSet lattice(xs);
    std::vector<int> lifts(n, 0);
    for (;;) {
      ++cases;
      const RegularDecomposition d =
          regular_decomposition(lattice, LiftingFunction(std::vector<double>(lifts.begin(), lifts.end())));
      mismatches += subsets_of(d) != oracle::hull_subsets(xs, lifts);
      int k = 0;
      while (k < n && ++lifts[k] > 5) lifts[k++] = 0;
      if (k == n) break;
    }
  }
  report(mismatches == 0, "hull vs supporting-line oracle",
         fmt("%g cases, %g mismatches  (%.1f s)", static_cast<double>(cases),
             static_cast<double>(mismatches), seconds_since(t0)));
}

}  // namespace

// --known-red NAME (repeatable) keeps a criterion's FAIL line but leaves it out of
// the exit status. Used by ctest for criteria that fail for documented reasons.
int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--known-red" && i + 1 < argc) known_red.emplace_back(argv[++i]);
  }
  lattice_decomposition();
  single_knot_decompositions();
  three_span_limit();
  plateau_limit();
  cubic_limit();
  random_convergence();
  insertion_invariance();
  stochasticity();
  single_weight();
  hull_oracle();
  std::printf("%d of 10 criteria failed\n", failures);
  for (const std::string& name : known_red) {
    if (std::find(failed.begin(), failed.end(), name) == failed.end()) std::printf("note: known-red criterion '%s' passed\n", name.c_str());
  }
  if (known_red_failures > 0) {
    std::printf("%d failure(s) are listed as known red and do not affect the exit status\n",
                known_red_failures);
  }
  return failures - known_red_failures;
}
