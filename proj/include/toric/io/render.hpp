#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "toric/io/document.hpp"

namespace toric::io {

struct FrameOptions {
  int samples = 400;
  int width = 800;
  int height = 600;
};

/// One SVG frame of every curve in the scene at parameter t: control polygon
/// (dashed gray), regular control curve (red, when a lifting is given), the
/// lifted curve (blue) and degenerate limit pieces as red dots.
std::string render_frame_svg(const SceneDocument& scene, double t, const FrameOptions& options);

struct FrameSet {
  std::vector<std::filesystem::path> files;  // frames, then manifest.json
  Json manifest;
};

/// Writes frame_000.svg ... plus manifest.json into out_dir (created if
/// needed). Output bytes depend only on the inputs.
FrameSet write_frames(const SceneDocument& scene, std::span<const double> t_schedule,
                      const FrameOptions& options, const std::filesystem::path& out_dir);

}  // namespace toric::io
