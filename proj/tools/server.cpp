#include <iostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "http_routes.hpp"

int main(int argc, char** argv) {
  CLI::App app{"HTTP/JSON service for quiver and seed computations", "clusterd"};
  std::string addr = "127.0.0.1";
  int port = 8080;
  cluster::service::Options options;
  app.add_option("--addr", addr, "Bind address");
  app.add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  app.add_option("--max-seeds", options.max_seeds, "Hard cap on exchange-graph size")->check(CLI::PositiveNumber);
  app.add_option("--max-quivers", options.max_quivers, "Hard cap on mutation-class size")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  httplib::Server server;
  cluster::service::mount(server, options);

  std::cerr << "listening on " << addr << ':' << port << '\n';
  if (!server.listen(addr, port)) {
    std::cerr << "cannot bind " << addr << ':' << port << '\n';
    return 1;
  }
  return 0;
}
