// toricnurbs: command-line front end for the toric degeneration engine.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "toric/degeneration.hpp"
#include "toric/io/document.hpp"
#include "toric/io/render.hpp"
#include "toric/io/service.hpp"
#include "toric/regular_decomposition.hpp"

namespace {

using namespace toric;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage: return 64;
    case ErrorCode::io: return 74;
    default: return 65;
  }
}

io::CurveDocument load_curve(const std::string& path) {
  return io::parse_curve(io::read_text_file(path));
}

void print_point(double u, const Point& p, int dimension) {
  if (dimension == 3) {
    std::printf("%.17g,%.17g,%.17g,%.17g\n", u, p.x, p.y, p.z);
  } else {
    std::printf("%.17g,%.17g,%.17g\n", u, p.x, p.y);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric degeneration of NURBS curves"};
  app.require_subcommand(1);

  std::string doc_path;
  std::string out_dir;
  std::vector<double> t_values;
  std::vector<double> u_values;
  int samples = 400;
  double tol = 1e-2;
  int port = 7878;
  std::string host = "127.0.0.1";

  auto* eval = app.add_subcommand("eval", "Evaluate the curve (lifted when --t is given)");
  eval->add_option("document", doc_path, "Curve document")->required()->check(CLI::ExistingFile);
  eval->add_option("--u", u_values, "Parameter in [0, 1]; repeatable");
  eval->add_option("--t", t_values, "Lift parameter (first value used)");
  eval->add_option("--samples", samples, "Uniform parameters when no --u is given")
      ->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Print the regular decomposition");
  decompose->add_option("document", doc_path, "Curve document")->required()->check(CLI::ExistingFile);

  auto* limit = app.add_subcommand("limit", "Print the regular control curve as JSON");
  limit->add_option("document", doc_path, "Curve document")->required()->check(CLI::ExistingFile);

  auto* frames = app.add_subcommand("frames", "Render SVG frames of a scene");
  frames->add_option("document", doc_path, "Scene or curve document")
      ->required()
      ->check(CLI::ExistingFile);
  frames->add_option("--out", out_dir, "Output directory")->required();
  frames->add_option("--t", t_values, "Frame parameter; repeatable (default: document t_schedule)");
  frames->add_option("--samples", samples, "Seed samples per curve")->capture_default_str();

  auto* report = app.add_subcommand("report", "Convergence report as JSON");
  report->add_option("document", doc_path, "Curve document")->required()->check(CLI::ExistingFile);
  report->add_option("--t", t_values, "Schedule entry; repeatable (default: document t_schedule)");
  report->add_option("--samples", samples, "Seed samples per curve")->capture_default_str();
  report->add_option("--tol", tol, "Tolerance relative to the diameter")->capture_default_str();

  auto* serve = app.add_subcommand("serve", "Serve the JSON endpoints over HTTP");
  serve->add_option("--port", port, "TCP port")->capture_default_str();
  serve->add_option("--host", host, "Bind address")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      const io::CurveDocument doc = load_curve(doc_path);
      if (u_values.empty()) {
        if (samples < 2) throw io::DocumentError(ErrorCode::usage, "need at least 2 samples", "samples");
        for (int i = 0; i < samples; ++i) {
          u_values.push_back(i + 1 == samples ? 1.0 : static_cast<double>(i) / (samples - 1));
        }
      }
      const LiftingFunction lifting =
          doc.lifting ? *doc.lifting : LiftingFunction::constant(doc.spec.control_count());
      for (double u : u_values) {
        const Point p = t_values.empty() ? eval_nurbs(doc.spec, u)
                                         : eval_nurbs_lifted(doc.spec, lifting, t_values.front(), u);
        print_point(u, p, doc.spec.dimension());
      }
    } else if (decompose->parsed()) {
      const io::CurveDocument doc = load_curve(doc_path);
      std::cout << format_decomposition(nurbs_regular_decomposition(doc.spec, doc.require_lifting()))
                << "\n";
    } else if (limit->parsed()) {
      std::cout << io::limit_json(load_curve(doc_path)).dump(2) << "\n";
    } else if (frames->parsed()) {
      const io::SceneDocument scene = io::parse_scene(io::read_text_file(doc_path));
      const std::vector<double>& schedule = t_values.empty() ? scene.t_schedule : t_values;
      io::FrameOptions options;
      options.samples = samples;
      for (const auto& f : io::write_frames(scene, schedule, options, out_dir).files) {
        std::cout << f.string() << "\n";
      }
    } else if (report->parsed()) {
      const std::string text = io::read_text_file(doc_path);
      const io::CurveDocument doc = io::parse_curve(text);
      const std::vector<double> schedule =
          t_values.empty() ? io::parse_scene(text).t_schedule : t_values;
      if (schedule.empty()) {
        throw io::DocumentError(ErrorCode::usage, "no t schedule: pass --t or set t_schedule",
                                "t_schedule");
      }
      std::cout << io::report_json(convergence_report(doc.spec, doc.require_lifting(), schedule,
                                                      samples, tol))
                       .dump(2)
                << "\n";
    } else if (serve->parsed()) {
      io::Server server;
      const int bound = server.bind(host, port);
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      server.listen();
    }
  } catch (const io::DocumentError& e) {
    std::cerr << "error: " << e.diagnostic() << "\n";
    return exit_code(e.code());
  } catch (const Error& e) {
    std::cerr << "error: " << (e.field().empty() ? "" : e.field() + ": ") << e.what() << "\n";
    return exit_code(e.code());
  }
  return 0;
}
