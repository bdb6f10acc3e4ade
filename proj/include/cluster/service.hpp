#pragma once

#include <cstddef>
#include <map>
#include <string>

namespace cluster::service {

struct Options {
  /// Hard cap on exchange-graph explorations; larger requests get 413.
  std::size_t max_seeds = 20'000;
  std::size_t max_quivers = 1'000'000;
};

struct Response {
  int status = 200;
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Stateless request dispatch; transport-independent so it can be driven
/// directly in tests.
Response handle(const std::string& method, const std::string& path, const std::string& body,
                const Options& options = {});

}  // namespace cluster::service
