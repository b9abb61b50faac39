#include "toric/io/document.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace toric::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw DocumentError(ErrorCode::validation, message, field);
}

std::string indexed(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

double number_at(const Json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(field, "expected a finite number");
  return x;
}

std::vector<double> number_array(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number_at(j[i], indexed(field, i)));
  return out;
}

// Points plus their common dimension.
std::pair<std::vector<Point>, int> point_array(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of [x, y] or [x, y, z]");
  std::vector<Point> out;
  int dim = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = indexed(field, i);
    const Json& p = j[i];
    if (!p.is_array() || (p.size() != 2 && p.size() != 3)) fail(f, "expected [x, y] or [x, y, z]");
    const int d = static_cast<int>(p.size());
    if (dim == 0) dim = d;
    if (d != dim) fail(f, "points mix 2 and 3 coordinates");
    out.push_back({number_at(p[0], indexed(f, 0)), number_at(p[1], indexed(f, 1)),
                   d == 3 ? number_at(p[2], indexed(f, 2)) : 0.0});
  }
  return {std::move(out), dim};
}

// Prefixes a nested field path, keeping the code of the original error.
[[noreturn]] void rethrow_nested(const Error& e, const std::string& prefix) {
  throw DocumentError(e.code(), e.what(), e.field().empty() ? prefix : prefix + "." + e.field());
}

// Best-effort source line of a field path such as "curves[1].weights[2]":
// the n-th occurrence of the leaf key, where n is the curve index.
int locate_field(std::string_view text, const std::string& field) {
  std::size_t occurrence = 0;
  std::string rest = field;
  if (rest.rfind("curves[", 0) == 0) {
    const std::size_t close = rest.find(']');
    occurrence = std::stoul(rest.substr(7, close - 7));
    rest = close + 2 <= rest.size() ? rest.substr(close + 2) : std::string("curves");
  }
  const std::string key = "\"" + rest.substr(0, rest.find_first_of("[.")) + "\"";
  if (key.size() <= 2) return 0;
  std::size_t pos = text.find(key);
  for (std::size_t k = 0; k < occurrence && pos != std::string_view::npos; ++k) {
    pos = text.find(key, pos + 1);
  }
  if (pos == std::string_view::npos) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + at, '\n'));
    std::string msg = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
    if (const std::size_t sp = msg.find("] "); sp != std::string::npos) msg = msg.substr(sp + 2);
    throw DocumentError(ErrorCode::parse, msg, "", line);
  }
}

template <class F>
auto with_lines(std::string_view text, F&& f) {
  try {
    return f(parse_json(text));
  } catch (const DocumentError& e) {
    if (e.line() > 0) throw;
    throw DocumentError(e.code(), e.what(), e.field(), locate_field(text, e.field()));
  } catch (const Error& e) {
    throw DocumentError(e.code(), e.what(), e.field(), locate_field(text, e.field()));
  }
}

Json point_json(const Point& p, int dimension) {
  Json a = Json::array({p.x, p.y});
  if (dimension == 3) a.push_back(p.z);
  return a;
}

}  // namespace

std::string DocumentError::diagnostic() const {
  std::string out;
  if (line_ > 0) out += "line " + std::to_string(line_) + ": ";
  if (!field().empty()) out += field() + ": ";
  return out + what();
}

const LiftingFunction& CurveDocument::require_lifting() const {
  if (!lifting) throw DocumentError(ErrorCode::usage, "document has no lifting", "lifting");
  return *lifting;
}

CurveDocument curve_from_json(const Json& j) {
  if (!j.is_object()) fail("", "curve document must be an object");
  for (const char* key : {"degree", "knots", "points", "weights"}) {
    if (!j.contains(key)) fail(key, "missing required field");
  }
  const Json& jd = j["degree"];
  if (!jd.is_number_integer()) fail("degree", "expected an integer");
  const auto degree = jd.get<long long>();
  if (degree < 1 || degree > 64) fail("degree", "degree must be between 1 and 64");

  std::vector<double> knots = number_array(j["knots"], "knots");
  auto [points, dim] = point_array(j["points"], "points");
  std::vector<double> weights = number_array(j["weights"], "weights");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) fail(indexed("weights", i), "weights must be positive");
  }

  std::optional<LiftingFunction> lifting;
  if (j.contains("lifting") && !j["lifting"].is_null()) {
    lifting.emplace(number_array(j["lifting"], "lifting"));
  }
  Json meta = Json::object();
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) fail("meta", "expected an object");
    meta = j["meta"];
  }
  Json style = Json::object();
  if (j.contains("style")) {
    if (!j["style"].is_object()) fail("style", "expected an object");
    style = j["style"];
  }

  CurveSpec spec(KnotVector(static_cast<int>(degree), std::move(knots)), std::move(points),
                 std::move(weights), dim);
  if (lifting) spec.check_lifting(*lifting);
  return {std::move(spec), std::move(lifting), std::move(meta), std::move(style)};
}

Json to_json(const CurveDocument& doc) {
  const CurveSpec& s = doc.spec;
  Json j = Json::object();
  j["degree"] = s.degree();
  j["knots"] = Json(std::vector<double>(s.knot_vector().knots().begin(), s.knot_vector().knots().end()));
  Json pts = Json::array();
  for (const Point& p : s.points()) pts.push_back(point_json(p, s.dimension()));
  j["points"] = std::move(pts);
  j["weights"] = Json(std::vector<double>(s.weights().begin(), s.weights().end()));
  if (doc.lifting) {
    j["lifting"] = Json(std::vector<double>(doc.lifting->values().begin(), doc.lifting->values().end()));
  }
  if (!doc.meta.empty()) j["meta"] = doc.meta;
  if (!doc.style.empty()) j["style"] = doc.style;
  return j;
}

SceneDocument scene_from_json(const Json& j) {
  if (!j.is_object()) fail("", "scene document must be an object");
  SceneDocument scene;
  if (j.contains("curves")) {
    const Json& cs = j["curves"];
    if (!cs.is_array() || cs.empty()) fail("curves", "expected a nonempty array of curves");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      try {
        scene.curves.push_back(curve_from_json(cs[i]));
      } catch (const Error& e) {
        rethrow_nested(e, indexed("curves", i));
      }
    }
  } else {
    scene.curves.push_back(curve_from_json(j));
  }
  if (j.contains("t_schedule")) {
    scene.t_schedule = number_array(j["t_schedule"], "t_schedule");
    for (std::size_t i = 0; i < scene.t_schedule.size(); ++i) {
      if (!(scene.t_schedule[i] > 0.0)) fail(indexed("t_schedule", i), "t values must be positive");
    }
  }
  return scene;
}

Json to_json(const SceneDocument& scene) {
  Json j = Json::object();
  Json cs = Json::array();
  for (const CurveDocument& c : scene.curves) cs.push_back(to_json(c));
  j["curves"] = std::move(cs);
  j["t_schedule"] = Json(scene.t_schedule);
  return j;
}

CurveDocument parse_curve(std::string_view text) {
  return with_lines(text, [](const Json& j) { return curve_from_json(j); });
}

SceneDocument parse_scene(std::string_view text) {
  return with_lines(text, [](const Json& j) { return scene_from_json(j); });
}

std::string serialize(const CurveDocument& doc) { return to_json(doc).dump(2) + "\n"; }
std::string serialize(const SceneDocument& scene) { return to_json(scene).dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(ErrorCode::io, "cannot open " + path.string() + " for reading", "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DocumentError(ErrorCode::io, "cannot open " + path.string() + " for writing", "");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DocumentError(ErrorCode::io, "failed writing " + path.string(), "");
}

}  // namespace toric::io
