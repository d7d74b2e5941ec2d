#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "service.hpp"
#include "tda/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"HTTP service for interactive Mapper exploration", "tda-mapper-service"};
  app.set_version_flag("--version", std::string("tda-mapper-service ") + tda::kVersion);

  tda::service::ServiceConfig config;
  std::string host = "127.0.0.1";
  int port = 8080;
  if (const char* env = std::getenv("TDA_MAPPER_PORT")) port = std::atoi(env);
  double time_limit_s = 10.0;
  std::string data_dir, static_dir;

  app.add_option("--host", host, "address to bind")->capture_default_str();
  app.add_option("--port", port, "port (default from TDA_MAPPER_PORT, else 8080)");
  app.add_option("--max-points", config.max_points, "upload size cap in points")->capture_default_str();
  app.add_option("--time-limit", time_limit_s, "seconds before a Mapper request is refused")->capture_default_str();
  app.add_option("--cors-origin", config.cors_origin, "Access-Control-Allow-Origin value")->capture_default_str();
  app.add_option("--data-dir", data_dir, "snapshot uploads here and reload them at start");
  app.add_option("--static-dir", static_dir, "serve the UI bundle from this directory");
  CLI11_PARSE(app, argc, argv);

  config.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit_s * 1000.0));
  config.data_dir = data_dir;
  config.static_dir = static_dir;

  tda::service::MapperService service(config);
  if (const auto n = service.load_snapshots()) std::cerr << "reloaded " << n << " dataset(s) from " << data_dir << '\n';

  httplib::Server server;
  service.mount(server);
  std::cerr << "listening on http://" << host << ':' << port << '\n';
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << host << ':' << port << '\n';
    return 1;
  }
  return 0;
}
