#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "tda/metric.hpp"

namespace httplib {
class Server;
}

namespace tda::service {

struct ServiceConfig {
  std::size_t max_points = 50000;
  std::chrono::milliseconds time_limit{10000};
  std::string cors_origin = "*";
  std::filesystem::path data_dir;    ///< snapshot uploads here when non-empty
  std::filesystem::path static_dir;  ///< serve the UI bundle from here when non-empty
  std::size_t cache_entries = 512;
};

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
  std::map<std::string, std::string> headers;
};

/// Immutable once stored.
struct Dataset {
  std::string id;
  std::string format;  ///< "points" or "matrix"
  MetricSpace data;
  std::int64_t uploaded_at = 0;  ///< seconds since the epoch
  std::string summary;           ///< JSON body of GET /datasets/{id}
};

/// Dataset store plus request routing. handle() is transport independent and
/// safe to call concurrently; mount() attaches it to an HTTP server.
class MapperService {
 public:
  explicit MapperService(ServiceConfig config = {});

  Response handle(const Request& request);
  void mount(httplib::Server& server);

  /// Reloads snapshots written by earlier runs from config.data_dir.
  std::size_t load_snapshots();

  const ServiceConfig& config() const { return config_; }

 private:
  Response upload(const Request& request);
  Response get_dataset(const std::string& id);
  Response run_mapper(const std::string& id, const Request& request);
  Response filters() const;

  std::shared_ptr<const Dataset> find(const std::string& id) const;
  std::shared_ptr<const Dataset> store(const std::string& format, const std::string& body, std::string id = {});

  std::string cached(const std::string& key);
  void remember(const std::string& key, const std::string& body);

  ServiceConfig config_;
  mutable std::shared_mutex store_mutex_;
  std::unordered_map<std::string, std::shared_ptr<const Dataset>> datasets_;
  std::atomic<std::uint64_t> next_id_{1};

  std::mutex cache_mutex_;
  std::list<std::pair<std::string, std::string>> cache_lru_;
  std::unordered_map<std::string, std::list<std::pair<std::string, std::string>>::iterator> cache_index_;
};

}  // namespace tda::service
