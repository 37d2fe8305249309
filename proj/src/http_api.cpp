#include "ptolemy_lab/http_api.hpp"

#include <httplib.h>

#include <charconv>
#include <stdexcept>

#include "ptolemy_lab/analysis.hpp"
#include "ptolemy_lab/error.hpp"
#include "ptolemy_lab/mutation.hpp"
#include "ptolemy_lab/serialize.hpp"

namespace ptolemy_lab {

namespace {

constexpr const char* kJson = "application/json";

template <typename F>
HttpReply guarded(F&& f) {
  try {
    return HttpReply{200, to_text(f())};
  } catch (const Error& e) {
    return HttpReply{400, to_text(error_json(e))};
  } catch (const std::logic_error& e) {
    Json out;
    out["error"] = "INTERNAL";
    out["message"] = e.what();
    return HttpReply{500, to_text(out)};
  }
}

Json parse_body(std::string_view body) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

void reply(httplib::Response& res, const HttpReply& r) {
  res.status = r.status;
  res.set_content(r.body, kJson);
}

}  // namespace

HttpReply handle_analyze(std::string_view body) {
  return guarded([&] { return analysis_json(analyze(parse_document_text(body))); });
}

HttpReply handle_closure(std::string_view body) {
  return guarded([&] { return document_json(ptolemy_closure(parse_document_text(body))); });
}

HttpReply handle_mutate(std::string_view body) {
  return guarded([&] {
    const Json req = parse_body(body);
    if (!req.is_object() || !req.contains("document") || !req.contains("diagonal")) {
      throw Error(ErrorCode::parse_error, "expected {\"document\", \"diagonal\", \"direction\"}");
    }
    const Diagram d = parse_document(req["document"]);
    const Diagonal c = parse_diagonal(d.polygon(), req["diagonal"]);
    MutationDirection dir = MutationDirection::backward;
    if (req.contains("direction")) {
      if (!req["direction"].is_string()) throw Error(ErrorCode::parse_error, "direction must be a string");
      dir = parse_direction(req["direction"].get<std::string>());
    }
    return mutation_json(mutate(d, c, dir));
  });
}

HttpReply handle_quiver(std::string_view size) {
  return guarded([&] {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(size.data(), size.data() + size.size(), n);
    if (size.empty() || ec != std::errc{} || ptr != size.data() + size.size()) {
      throw Error(ErrorCode::parse_error, "size must be an integer");
    }
    if (n > kMaxQuiverSize) {
      throw Error(ErrorCode::size_limit, "size above " + std::to_string(kMaxQuiverSize));
    }
    return quiver_json(ar_quiver(Polygon(n)));
  });
}

bool install_routes(httplib::Server& server, const std::string& static_dir) {
  server.Post("/api/analyze", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_analyze(req.body));
  });
  server.Post("/api/closure", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_closure(req.body));
  });
  server.Post("/api/mutate", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_mutate(req.body));
  });
  server.Get("/api/quiver", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_quiver(req.get_param_value("size")));
  });
  if (static_dir.empty()) return true;
  return server.set_mount_point("/", static_dir);
}

void serve(const std::string& host, int port, const std::string& static_dir) {
  httplib::Server server;
  install_routes(server, static_dir);
  if (!server.bind_to_port(host, port)) {
    throw Error(ErrorCode::bind_failure, "cannot bind " + host + ":" + std::to_string(port));
  }
  server.listen_after_bind();
}

}  // namespace ptolemy_lab
