#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "toric/io/document.hpp"
#include "toric/verification.hpp"

namespace toric::io {

// Response payloads shared by the CLI and the service so both print the
// same numbers.
Json sample_json(const CurveDocument& doc, double t, int count);
Json decompose_json(const CurveDocument& doc);
Json limit_json(const CurveDocument& doc);
Json report_json(const ConvergenceReport& report);
Json error_json(const Error& e);

struct Response {
  int status = 200;
  std::string body;
};

/// Stateless dispatch of one POST body to /validate, /sample, /decompose,
/// /limit or /report. Failures become 400 with {code, message, field}.
Response handle_request(std::string_view path, std::string_view body);

/// HTTP front end for handle_request.
class Server {
 public:
  Server();
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called from another thread.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace toric::io
