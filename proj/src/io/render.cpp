#include "toric/io/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "toric/degeneration.hpp"
#include "toric/verification.hpp"

namespace toric::io {

namespace {

constexpr double kMargin = 0.05;

// Model to pixel transform with a uniform scale and y pointing up.
struct View {
  double min_x, max_y, scale, off_x, off_y;

  std::pair<double, double> map(const Point& p) const {
    return {off_x + (p.x - min_x) * scale, off_y + (max_y - p.y) * scale};
  }
};

View fit_view(const SceneDocument& scene, const FrameOptions& o) {
  double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
  for (const CurveDocument& c : scene.curves) {
    for (const Point& p : c.spec.points()) {
      lo_x = std::min(lo_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_x = std::max(hi_x, p.x);
      hi_y = std::max(hi_y, p.y);
    }
  }
  const double span_x = std::max(hi_x - lo_x, 1e-12);
  const double span_y = std::max(hi_y - lo_y, 1e-12);
  const double usable = 1.0 - 2.0 * kMargin;
  const double scale = std::min(o.width * usable / span_x, o.height * usable / span_y);
  return {lo_x, hi_y, scale, 0.5 * (o.width - span_x * scale), 0.5 * (o.height - span_y * scale)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string points_attr(const View& view, std::span<const Point> pts) {
  std::string out;
  for (const Point& p : pts) {
    const auto [x, y] = view.map(p);
    if (!out.empty()) out += ' ';
    out += fmt(x) + ',' + fmt(y);
  }
  return out;
}

std::string polyline(const View& view, std::span<const Point> pts, const std::string& style) {
  return "  <polyline points=\"" + points_attr(view, pts) + "\" " + style + "/>\n";
}

std::string dot(const View& view, const Point& p, const std::string& fill) {
  const auto [x, y] = view.map(p);
  return "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"4\" fill=\"" + fill + "\"/>\n";
}

std::string style_or(const Json& style, const char* key, const std::string& fallback) {
  return style.contains(key) && style[key].is_string() ? style[key].get<std::string>() : fallback;
}

}  // namespace

std::string render_frame_svg(const SceneDocument& scene, double t, const FrameOptions& options) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DocumentError(ErrorCode::domain, "t must be positive", "t");
  if (options.width <= 0 || options.height <= 0) {
    throw DocumentError(ErrorCode::usage, "frame size must be positive", "size");
  }
  const View view = fit_view(scene, options);
  SamplingOptions sampling;
  sampling.seeds = options.samples;

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(options.width) + "\" height=\"" + std::to_string(options.height) +
                    "\" viewBox=\"0 0 " + std::to_string(options.width) + " " +
                    std::to_string(options.height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">t = " +
         fmt(t) + "</text>\n";

  for (const CurveDocument& c : scene.curves) {
    const std::string curve_color = style_or(c.style, "color", "#1f5fbf");
    const std::string limit_color = style_or(c.style, "limit_color", "#d62728");
    svg += "  <g>\n";
    svg += polyline(view, c.spec.points(),
                    "fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");
    for (const Point& p : c.spec.points()) svg += dot(view, p, "#999999");

    const LiftingFunction lifting =
        c.lifting ? *c.lifting : LiftingFunction::constant(c.spec.control_count());
    if (c.lifting) {
      const RegularControlCurve rcc = regular_control_curve(c.spec, lifting);
      const SampledCurve limit = sample_limit_curve(rcc, 100, sampling);
      for (const auto& strand : limit.strands) {
        svg += polyline(view, strand,
                        "fill=\"none\" stroke=\"" + limit_color + "\" stroke-width=\"2\"");
      }
      for (const RegularControlPiece& piece : rcc.pieces) {
        if (piece.degenerate) svg += dot(view, piece.curve.points.front(), limit_color);
      }
    }
    const SampledCurve curve = sample_lifted_curve(c.spec, lifting, t, sampling);
    for (const auto& strand : curve.strands) {
      svg += polyline(view, strand,
                      "fill=\"none\" stroke=\"" + curve_color + "\" stroke-width=\"1.5\"");
    }
    svg += "  </g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

FrameSet write_frames(const SceneDocument& scene, std::span<const double> t_schedule,
                      const FrameOptions& options, const std::filesystem::path& out_dir) {
  if (t_schedule.empty()) throw DocumentError(ErrorCode::usage, "empty t schedule", "t_schedule");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw DocumentError(ErrorCode::io, "cannot create " + out_dir.string() + ": " + ec.message(),
                        "out");
  }

  FrameSet set;
  Json frames = Json::array();
  for (std::size_t i = 0; i < t_schedule.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.svg", i);
    const std::filesystem::path path = out_dir / name;
    write_text_file(path, render_frame_svg(scene, t_schedule[i], options));
    set.files.push_back(path);
    frames.push_back(Json{{"file", name}, {"t", t_schedule[i]}});
  }

  Json curves = Json::array();
  for (const CurveDocument& c : scene.curves) {
    curves.push_back(Json{{"meta", c.meta}, {"has_lifting", c.lifting.has_value()}});
  }
  set.manifest = Json{{"frames", std::move(frames)},
                      {"curves", std::move(curves)},
                      {"samples", options.samples},
                      {"width", options.width},
                      {"height", options.height}};
  const std::filesystem::path manifest = out_dir / "manifest.json";
  write_text_file(manifest, set.manifest.dump(2) + "\n");
  set.files.push_back(manifest);
  return set;
}

}  // namespace toric::io
