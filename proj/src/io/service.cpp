#include "toric/io/service.hpp"

#include <httplib.h>

#include <cmath>
#include <vector>

#include "toric/degeneration.hpp"
#include "toric/regular_decomposition.hpp"

namespace toric::io {

namespace {

Json point_json(const Point& p, int dimension) {
  Json a = Json::array({p.x, p.y});
  if (dimension == 3) a.push_back(p.z);
  return a;
}

double number_field(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j[key];
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    throw DocumentError(ErrorCode::validation, "expected a finite number", key);
  }
  return v.get<double>();
}

int int_field(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) {
    throw DocumentError(ErrorCode::validation, "expected an integer", key);
  }
  return j[key].get<int>();
}

Json parse_body(std::string_view body) {
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(ErrorCode::parse, e.what(), "");
  }
}

Json validate_json(std::string_view body) {
  try {
    const CurveDocument doc = parse_curve(body);
    return Json{{"valid", true},
                {"dimension", doc.spec.dimension()},
                {"control_count", doc.spec.control_count()},
                {"segment_count", doc.spec.segment_count()},
                {"has_lifting", doc.lifting.has_value()},
                {"diagnostics", Json::array()}};
  } catch (const DocumentError& e) {
    Json d = error_json(e);
    d["line"] = e.line();
    return Json{{"valid", false}, {"diagnostics", Json::array({d})}};
  } catch (const Error& e) {
    return Json{{"valid", false}, {"diagnostics", Json::array({error_json(e)})}};
  }
}

Json dispatch(std::string_view path, std::string_view body) {
  if (path == "/validate") return validate_json(body);
  const Json j = parse_body(body);
  const CurveDocument doc = curve_from_json(j);
  if (path == "/sample") return sample_json(doc, number_field(j, "t", 1.0), int_field(j, "count", 400));
  if (path == "/decompose") return decompose_json(doc);
  if (path == "/limit") return limit_json(doc);
  if (path == "/report") {
    if (!j.contains("t_schedule")) {
      throw DocumentError(ErrorCode::usage, "missing t schedule", "t_schedule");
    }
    const SceneDocument scene = scene_from_json(j);
    return report_json(convergence_report(doc.spec, doc.require_lifting(), scene.t_schedule,
                                          int_field(j, "samples", 400),
                                          number_field(j, "tol", 1e-2)));
  }
  throw DocumentError(ErrorCode::usage, "unknown endpoint " + std::string(path), "path");
}

}  // namespace

Json sample_json(const CurveDocument& doc, double t, int count) {
  if (count < 2) throw DocumentError(ErrorCode::validation, "count must be at least 2", "count");
  const LiftingFunction lifting =
      doc.lifting ? *doc.lifting : LiftingFunction::constant(doc.spec.control_count());
  Json params = Json::array();
  Json pts = Json::array();
  for (int i = 0; i < count; ++i) {
    const double u = i + 1 == count ? 1.0 : static_cast<double>(i) / (count - 1);
    params.push_back(u);
    pts.push_back(point_json(eval_nurbs_lifted(doc.spec, lifting, t, u), doc.spec.dimension()));
  }
  return Json{{"t", t}, {"parameters", std::move(params)}, {"points", std::move(pts)}};
}

Json decompose_json(const CurveDocument& doc) {
  const NurbsRegularDecomposition d = nurbs_regular_decomposition(doc.spec, doc.require_lifting());
  Json pieces = Json::array();
  for (const PieceDecomposition& pd : d.per_piece) {
    Json subsets = Json::array();
    for (const LatticeSet& s : pd.decomposition.subsets) {
      subsets.push_back(Json(std::vector<int>(s.indices().begin(), s.indices().end())));
    }
    pieces.push_back(Json{{"piece", pd.piece_index}, {"lifts", pd.lifts}, {"subsets", std::move(subsets)}});
  }
  return Json{{"pieces", std::move(pieces)}, {"text", format_decomposition(d)}};
}

Json limit_json(const CurveDocument& doc) {
  const RegularControlCurve rcc = regular_control_curve(doc.spec, doc.require_lifting());
  Json pieces = Json::array();
  for (const RegularControlPiece& p : rcc.pieces) {
    Json pts = Json::array();
    for (const Point& q : p.curve.points) pts.push_back(point_json(q, doc.spec.dimension()));
    const auto idx = p.curve.lattice.indices();
    pieces.push_back(Json{{"bezier_piece", p.bezier_piece},
                          {"lattice", std::vector<int>(idx.begin(), idx.end())},
                          {"coeffs", p.curve.coeffs},
                          {"weights", p.curve.weights},
                          {"points", std::move(pts)},
                          {"degenerate", p.degenerate}});
  }
  return Json{{"diameter", rcc.diameter}, {"pieces", std::move(pieces)}};
}

Json report_json(const ConvergenceReport& r) {
  return Json{{"t_values", r.t_values},     {"distances", r.distances},
              {"diameter", r.diameter},     {"tolerance", r.tolerance},
              {"converged", r.converged},   {"monotone_tail", r.monotone_tail}};
}

Json error_json(const Error& e) {
  return Json{{"code", to_string(e.code())}, {"message", e.what()}, {"field", e.field()}};
}

Response handle_request(std::string_view path, std::string_view body) {
  try {
    return {200, dispatch(path, body).dump()};
  } catch (const Error& e) {
    return {path == "/validate" || path == "/sample" || path == "/decompose" || path == "/limit" ||
                    path == "/report"
                ? 400
                : 404,
            error_json(e).dump()};
  } catch (const std::exception& e) {
    return {500, Json{{"code", "internal_error"}, {"message", e.what()}, {"field", ""}}.dump()};
  }
}

struct Server::Impl {
  httplib::Server http;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
  auto route = [](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle_request(req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  for (const char* path : {"/validate", "/sample", "/decompose", "/limit", "/report"}) {
    impl_->http.Post(path, route);
  }
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->http.bind_to_any_port(host)
                              : (impl_->http.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw DocumentError(ErrorCode::io, "cannot bind " + host + ":" + std::to_string(port), "port");
  }
  return bound;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

}  // namespace toric::io
