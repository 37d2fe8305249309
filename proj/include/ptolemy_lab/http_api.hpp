#pragma once

#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace ptolemy_lab {

struct HttpReply {
  int status = 200;
  std::string body;
};

// Request handlers. Each takes the raw request body (or query value) and
// never throws; validation failures come back as 400 with an error body.
HttpReply handle_analyze(std::string_view body);
HttpReply handle_closure(std::string_view body);
HttpReply handle_mutate(std::string_view body);
HttpReply handle_quiver(std::string_view size);

/// Largest polygon served by the quiver endpoint.
inline constexpr int kMaxQuiverSize = 64;

/// Registers the /api routes, and mounts `static_dir` at / when non-empty.
/// Returns false if the static directory cannot be mounted.
bool install_routes(httplib::Server& server, const std::string& static_dir);

/// Blocks serving on host:port. Throws Error(bind_failure).
void serve(const std::string& host, int port, const std::string& static_dir);

}  // namespace ptolemy_lab
