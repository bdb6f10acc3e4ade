#include "cluster/service.hpp"

#include <algorithm>

#include <json.hpp>

#include "cluster/commands.hpp"
#include "cluster/error.hpp"
#include "cluster/io.hpp"

namespace cluster::service {

namespace {

using nlohmann::json;

Response reply(int status, const json& body) {
  Response r{status, body.dump(), {}};
  r.headers["Content-Type"] = "application/json";
  r.headers["Access-Control-Allow-Origin"] = "*";
  r.headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
  r.headers["Access-Control-Allow-Headers"] = "Content-Type";
  return r;
}

Response failure(int status, std::string_view error, const std::string& detail) {
  return reply(status, {{"error", error}, {"detail", detail}});
}

struct OverLimit {
  std::string detail;
};

std::size_t limit_of(const json& body, std::size_t cap) {
  if (!body.contains("limit")) return cap;
  const auto& v = body.at("limit");
  if (!v.is_number_unsigned() || v.get<std::size_t>() < 1)
    throw Error(ErrorKind::ParseError, "\"limit\" must be a positive integer");
  const auto limit = v.get<std::size_t>();
  if (limit > cap) throw OverLimit{"limit " + std::to_string(limit) + " exceeds the server cap " + std::to_string(cap)};
  return limit;
}

bool flag(const json& body, const char* name, bool fallback) {
  if (!body.contains(name)) return fallback;
  if (!body.at(name).is_boolean()) throw Error(ErrorKind::ParseError, std::string("\"") + name + "\" must be a boolean");
  return body.at(name).get<bool>();
}

Quiver quiver_of(const json& body) {
  if (!body.contains("quiver")) throw Error(ErrorKind::ParseError, "request needs a \"quiver\"");
  return quiver_from_json(body.at("quiver"));
}

json mutate(const json& body) {
  const json& seed_json = body.contains("seed") ? body.at("seed") : body;
  Seed seed = seed_from_json(seed_json);
  std::vector<int> at;
  if (body.contains("k")) {
    if (!body.at("k").is_number_integer()) throw Error(ErrorKind::ParseError, "\"k\" must be a vertex number");
    at.push_back(body.at("k").get<int>());
  } else if (body.contains("at") && body.at("at").is_array()) {
    for (const auto& v : body.at("at")) {
      if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "\"at\" lists vertex numbers");
      at.push_back(v.get<int>());
    }
  } else {
    throw Error(ErrorKind::ParseError, "request needs \"k\" or \"at\"");
  }
  return commands::mutate(seed, at, flag(body, "quiver_only", false));
}

}  // namespace

Response handle(const std::string& method, const std::string& path, const std::string& body,
                const Options& options) {
  if (method == "OPTIONS") return reply(204, json::object());
  if (path == "/health") {
    if (method != "GET") return failure(405, "MethodNotAllowed", "use GET");
    return reply(200, {{"status", "ok"}});
  }
  static const char* const posts[] = {"/mutate", "/explore", "/class", "/classify", "/cc", "/variables"};
  if (std::find(std::begin(posts), std::end(posts), path) == std::end(posts))
    return failure(404, "NotFound", "no endpoint " + path);
  if (method != "POST") return failure(405, "MethodNotAllowed", "use POST");

  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return failure(400, "ParseError", e.what());
  }
  if (!request.is_object()) return failure(400, "ParseError", "request body must be a JSON object");

  try {
    if (path == "/mutate") return reply(200, mutate(request));
    if (path == "/explore")
      return reply(200, commands::explore(quiver_of(request), limit_of(request, options.max_seeds),
                                          flag(request, "full", false)));
    if (path == "/variables") return reply(200, commands::variables(quiver_of(request), limit_of(request, options.max_seeds)));
    if (path == "/class")
      return reply(200, commands::mutation_class(quiver_of(request), limit_of(request, options.max_quivers),
                                                 flag(request, "full", false)));
    if (path == "/classify")
      return reply(200, commands::classify(quiver_of(request), limit_of(request, options.max_quivers),
                                           flag(request, "early_exit", true)));
    return reply(200, commands::cc(request));
  } catch (const OverLimit& e) {
    return failure(413, "OverLimit", e.detail);
  } catch (const Error& e) {
    const bool malformed = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument;
    return failure(malformed ? 400 : 422, e.name(), e.detail());
  } catch (const json::exception& e) {
    return failure(400, "ParseError", e.what());
  }
}

}  // namespace cluster::service
