#pragma once

#include <httplib.h>

#include "cluster/service.hpp"

namespace cluster::service {

/// Routes every request on `server` through handle().
inline void mount(httplib::Server& server, const Options& options) {
  auto dispatch = [options](const httplib::Request& req, httplib::Response& res) {
    const auto r = handle(req.method, req.path, req.body, options);
    res.status = r.status;
    for (const auto& [k, v] : r.headers)
      if (k != "Content-Type") res.set_header(k, v);
    res.set_content(r.body, "application/json");
  };
  server.Get(".*", dispatch);
  server.Post(".*", dispatch);
  server.Options(".*", dispatch);
}

}  // namespace cluster::service
