#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "toric/errors.hpp"
#include "toric/geometry.hpp"

namespace toric::io {

// Key order is preserved so serialized documents read like their sources.
using Json = nlohmann::ordered_json;

/// Parse or validation failure in a document, located by field path
/// ("weights[2]") and, when parsed from text, by 1-based line.
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, const std::string& message, std::string field, int line = 0)
      : Error(code, message, std::move(field)), line_(line) {}

  int line() const noexcept { return line_; }
  /// "line 4: weights[2]: weights must be positive"
  std::string diagnostic() const;

 private:
  int line_;
};

/// One curve: validated spec plus optional lifting and free-form extras.
struct CurveDocument {
  CurveSpec spec;
  std::optional<LiftingFunction> lifting;
  Json meta = Json::object();
  Json style = Json::object();  // render hints, scenes only

  /// Lifting or a usage error naming the missing field.
  const LiftingFunction& require_lifting() const;
};

struct SceneDocument {
  std::vector<CurveDocument> curves;
  std::vector<double> t_schedule;
};

CurveDocument curve_from_json(const Json& j);
Json to_json(const CurveDocument& doc);

/// Accepts a scene ({curves, t_schedule}) or a bare curve document, which
/// becomes a one-curve scene.
SceneDocument scene_from_json(const Json& j);
Json to_json(const SceneDocument& scene);

/// Text entry points; errors carry the line of the offending field.
CurveDocument parse_curve(std::string_view text);
SceneDocument parse_scene(std::string_view text);

/// Doubles are written in shortest round-trip form, so parse(serialize(d))
/// reproduces every numeric array bit for bit.
std::string serialize(const CurveDocument& doc);
std::string serialize(const SceneDocument& scene);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace toric::io
