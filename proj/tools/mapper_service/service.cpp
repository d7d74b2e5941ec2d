#include "service.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "tda/error.hpp"
#include "tda/io.hpp"
#include "tda/mapper.hpp"
#include "tda/serialize.hpp"

namespace tda::service {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

Response json_response(int status, const json& body) { return {status, body.dump(), "application/json", {}}; }

Response error_response(int status, const std::string& message) { return json_response(status, {{"error", message}}); }

std::string format_id(std::uint64_t n) {
  std::ostringstream os;
  os << "ds" << std::setw(6) << std::setfill('0') << n;
  return os.str();
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path);
  for (std::string p; std::getline(ss, p, '/');)
    if (!p.empty()) parts.push_back(p);
  return parts;
}

json range_of(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {{"min", *lo}, {"max", *hi}};
}

// Eccentricity and centrality share one pass over all pairs.
json filter_ranges(const MetricSpace& data) {
  const std::size_t n = data.size();
  std::vector<double> ecc(n, 0.0), cen(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = data.distance(i, j);
      ecc[i] = std::max(ecc[i], d);
      ecc[j] = std::max(ecc[j], d);
      cen[i] += d;
      cen[j] += d;
    }
  json out = {{"eccentricity", range_of(ecc)}, {"centrality", range_of(cen)}};
  if (const auto* pts = data.points()) {
    for (std::size_t c = 0; c < pts->dim(); ++c) {
      std::vector<double> col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = (*pts)[i][c];
      out["coordinate:" + std::to_string(c)] = range_of(col);
    }
  }
  return out;
}

struct ParsedSettings {
  MapperSettings settings;
  json errors = json::object();
};

ParsedSettings parse_settings(const json& body, const Dataset& ds) {
  ParsedSettings p;
  auto& s = p.settings;
  auto& errors = p.errors;
  const auto* pts = ds.data.points();

  if (!body.contains("filter") || !body["filter"].is_string()) {
    errors["filter"] = "required string";
  } else {
    s.filter = body["filter"].get<std::string>();
    try {
      const auto spec = FilterSpec::parse(s.filter, pts ? pts->dim() : 0);
      if (spec.kind == FilterKind::coordinate && (!pts || spec.coordinate >= pts->dim()))
        errors["filter"] = "coordinate index out of range for this dataset";
      if (spec.kind == FilterKind::distance_to_point && spec.reference >= ds.data.size())
        errors["filter"] = "reference point out of range for this dataset";
      if (spec.kind == FilterKind::density && !(spec.bandwidth > 0.0))
        errors["filter"] = "density bandwidth must be positive";
    } catch (const InputError& e) {
      errors["filter"] = e.what();
    }
  }

  if (body.contains("intervals")) {
    const auto& v = body["intervals"];
    if (!v.is_number_integer() || v.get<long long>() < 1)
      errors["intervals"] = "must be a positive integer";
    else
      s.intervals = v.get<std::size_t>();
  }
  if (body.contains("resolution")) {
    const auto& v = body["resolution"];
    if (!v.is_number() || !(v.get<double>() > 0.0) || !std::isfinite(v.get<double>()))
      errors["resolution"] = "must be a positive number";
    else
      s.resolution = v.get<double>();
  } else if (!s.intervals && !errors.contains("intervals")) {
    errors["resolution"] = "required (or give intervals)";
  }

  if (!body.contains("gain") || !body["gain"].is_number()) {
    errors["gain"] = "required number in (0, 1)";
  } else {
    s.gain = body["gain"].get<double>();
    if (!(s.gain > 0.0 && s.gain < 1.0)) errors["gain"] = "must lie in (0, 1)";
  }

  if (body.contains("clustering")) {
    const auto& c = body["clustering"];
    try {
      if (c.is_string()) {
        s.clustering = ClusteringConfig::parse(c.get<std::string>());
      } else if (c.is_object() && c.contains("method") && c["method"].is_string()) {
        std::string text = c["method"].get<std::string>();
        for (const char* key : {"epsilon", "threshold", "k"})
          if (c.contains(key)) {
            if (!c[key].is_number()) throw InputError(std::string(key) + " must be a number");
            text += ":" + io::format_double(c[key].get<double>());
          }
        s.clustering = ClusteringConfig::parse(text);
      } else {
        errors["clustering"] = "expected \"epsilon:e\", \"knn:k\", \"linkage:h\" or {method, ...}";
      }
    } catch (const InputError& e) {
      errors["clustering"] = e.what();
    }
  }
  return p;
}

std::string cache_key(const std::string& id, const MapperSettings& s) {
  std::ostringstream os;
  os << id << '|' << s.filter << '|' << (s.resolution ? io::format_double(*s.resolution) : "-") << '|'
     << (s.intervals ? std::to_string(*s.intervals) : "-") << '|' << io::format_double(s.gain) << '|'
     << s.clustering.describe();
  return os.str();
}

}  // namespace

MapperService::MapperService(ServiceConfig config) : config_(std::move(config)) {}

Response MapperService::handle(const Request& request) {
  Response r;
  try {
    const auto parts = split_path(request.path);
    if (request.method == "OPTIONS") {
      r = {204, "", "text/plain", {}};
    } else if (parts.size() == 1 && parts[0] == "filters" && request.method == "GET") {
      r = filters();
    } else if (parts.size() == 1 && parts[0] == "datasets" && request.method == "POST") {
      r = upload(request);
    } else if (parts.size() == 2 && parts[0] == "datasets" && request.method == "GET") {
      r = get_dataset(parts[1]);
    } else if (parts.size() == 3 && parts[0] == "datasets" && parts[2] == "mapper" && request.method == "POST") {
      r = run_mapper(parts[1], request);
    } else if (!parts.empty() && (parts[0] == "datasets" || parts[0] == "filters")) {
      r = error_response(405, "method not allowed");
    } else {
      r = error_response(404, "no such endpoint");
    }
  } catch (const std::exception& e) {
    r = error_response(500, e.what());
  }
  r.headers["Access-Control-Allow-Origin"] = config_.cors_origin;
  r.headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
  r.headers["Access-Control-Allow-Headers"] = "Content-Type";
  r.headers["Access-Control-Expose-Headers"] = "X-Compute-Time-Ms, X-Cache";
  return r;
}

std::shared_ptr<const Dataset> MapperService::store(const std::string& format, const std::string& body, std::string id) {
  std::istringstream in(body);
  auto data = format == "matrix" ? MetricSpace(io::read_matrix(in)) : MetricSpace(io::read_points(in));
  if (id.empty()) id = format_id(next_id_.fetch_add(1));
  json summary = {{"id", id}, {"format", format}, {"n", data.size()}};
  summary["d"] = data.points() ? json(data.points()->dim()) : json(nullptr);
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch());
  summary["uploaded_at"] = now.count();
  summary["filters"] = filter_ranges(data);
  auto ds = std::make_shared<Dataset>(Dataset{id, format, std::move(data), now.count(), summary.dump()});
  std::unique_lock lock(store_mutex_);
  datasets_[id] = ds;
  return ds;
}

std::shared_ptr<const Dataset> MapperService::find(const std::string& id) const {
  std::shared_lock lock(store_mutex_);
  const auto it = datasets_.find(id);
  return it == datasets_.end() ? nullptr : it->second;
}

Response MapperService::upload(const Request& request) {
  std::string format = "points";
  if (const auto it = request.query.find("format"); it != request.query.end()) format = it->second;
  if (format != "points" && format != "matrix") return error_response(400, "format must be points or matrix");

  // Cheap row count before parsing so oversized uploads are refused early.
  std::size_t rows = 0;
  bool in_row = false;
  for (char c : request.body) {
    if (c == '\n') {
      rows += in_row;
      in_row = false;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      in_row = true;
    }
  }
  rows += in_row;
  if (rows > config_.max_points + 1)
    return error_response(413, "dataset exceeds the point cap of " + std::to_string(config_.max_points));

  std::shared_ptr<const Dataset> ds;
  try {
    ds = store(format, request.body);
  } catch (const InputError& e) {
    return error_response(400, e.what());
  }
  if (ds->data.size() > config_.max_points) {
    std::unique_lock lock(store_mutex_);
    datasets_.erase(ds->id);
    return error_response(413, "dataset exceeds the point cap of " + std::to_string(config_.max_points));
  }
  if (!config_.data_dir.empty()) {
    fs::create_directories(config_.data_dir);
    std::ofstream f(config_.data_dir / (ds->id + "." + format), std::ios::binary);
    f << request.body;
  }
  Response r{201, ds->summary, "application/json", {}};
  r.headers["Location"] = "/datasets/" + ds->id;
  return r;
}

std::size_t MapperService::load_snapshots() {
  if (config_.data_dir.empty() || !fs::is_directory(config_.data_dir)) return 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(config_.data_dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::size_t loaded = 0;
  for (const auto& f : files) {
    const std::string ext = f.extension().string();
    if (ext != ".points" && ext != ".matrix") continue;
    const std::string id = f.stem().string();
    try {
      store(ext.substr(1), io::read_text(f), id);
      ++loaded;
    } catch (const InputError&) {
      continue;
    }
    if (id.size() > 2 && id.rfind("ds", 0) == 0) {
      const auto n = std::strtoull(id.c_str() + 2, nullptr, 10);
      std::uint64_t cur = next_id_.load();
      while (n >= cur && !next_id_.compare_exchange_weak(cur, n + 1)) {
      }
    }
  }
  return loaded;
}

Response MapperService::get_dataset(const std::string& id) {
  const auto ds = find(id);
  if (!ds) return error_response(404, "unknown dataset " + id);
  return {200, ds->summary, "application/json", {}};
}

Response MapperService::filters() const {
  const json body = json::array({
      {{"name", "eccentricity"}, {"syntax", "eccentricity"}, {"description", "max distance to any other point"}},
      {{"name", "centrality"}, {"syntax", "centrality"}, {"description", "sum of distances to all points"}},
      {{"name", "height"}, {"syntax", "height"}, {"description", "last coordinate (point clouds only)"}},
      {{"name", "coordinate"}, {"syntax", "coordinate:j"}, {"description", "coordinate j, 0-based (point clouds only)"}},
      {{"name", "distance_to_point"}, {"syntax", "distance_to_point:i"}, {"description", "distance to point i"}},
      {{"name", "density"}, {"syntax", "density:h"}, {"description", "mean Gaussian kernel of bandwidth h"}},
  });
  return json_response(200, body);
}

std::string MapperService::cached(const std::string& key) {
  std::lock_guard lock(cache_mutex_);
  const auto it = cache_index_.find(key);
  if (it == cache_index_.end()) return {};
  cache_lru_.splice(cache_lru_.begin(), cache_lru_, it->second);
  return it->second->second;
}

void MapperService::remember(const std::string& key, const std::string& body) {
  std::lock_guard lock(cache_mutex_);
  if (cache_index_.count(key)) return;
  cache_lru_.emplace_front(key, body);
  cache_index_[key] = cache_lru_.begin();
  while (cache_lru_.size() > config_.cache_entries) {
    cache_index_.erase(cache_lru_.back().first);
    cache_lru_.pop_back();
  }
}

Response MapperService::run_mapper(const std::string& id, const Request& request) {
  const auto ds = find(id);
  if (!ds) return error_response(404, "unknown dataset " + id);
  json body;
  try {
    body = json::parse(request.body);
  } catch (const json::parse_error&) {
    return json_response(422, {{"error", "invalid parameters"}, {"errors", {{"body", "not valid JSON"}}}});
  }
  if (!body.is_object())
    return json_response(422, {{"error", "invalid parameters"}, {"errors", {{"body", "expected a JSON object"}}}});
  const auto parsed = parse_settings(body, *ds);
  if (!parsed.errors.empty()) return json_response(422, {{"error", "invalid parameters"}, {"errors", parsed.errors}});

  const std::string key = cache_key(id, parsed.settings);
  if (auto hit = cached(key); !hit.empty()) {
    Response r{200, std::move(hit), "application/json", {}};
    r.headers["X-Compute-Time-Ms"] = "0";
    r.headers["X-Cache"] = "hit";
    return r;
  }

  const auto start = std::chrono::steady_clock::now();
  MapperOptions options;
  options.deadline = start + config_.time_limit;
  std::vector<std::string> warnings;
  MapperGraph graph;
  try {
    graph = tda::run_mapper(ds->data, parsed.settings, &warnings, options);
  } catch (const MapperCancelled&) {
    const auto secs = std::chrono::duration<double>(config_.time_limit).count();
    std::ostringstream msg;
    msg << "computation exceeded " << secs << " s; upload fewer points (lower the point cap) or coarsen the cover";
    return json_response(422, {{"error", "time limit"}, {"errors", {{"data", msg.str()}}}});
  } catch (const InputError& e) {
    return json_response(422, {{"error", "invalid parameters"}, {"errors", {{"params", e.what()}}}});
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json out = json::parse(serialize::mapper_json(graph));
  out["dataset"] = id;
  out["warnings"] = warnings;
  std::string text = out.dump();
  remember(key, text);
  Response r{200, std::move(text), "application/json", {}};
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << elapsed;
  r.headers["X-Compute-Time-Ms"] = ms.str();
  r.headers["X-Cache"] = "miss";
  return r;
}

void MapperService::mount(httplib::Server& server) {
  auto bridge = [this](const httplib::Request& req, httplib::Response& res) {
    Request r{req.method, req.path, {}, req.body};
    for (const auto& [k, v] : req.params) r.query.emplace(k, v);
    const auto out = handle(r);
    res.status = out.status;
    for (const auto& [k, v] : out.headers) res.set_header(k, v);
    res.set_content(out.body, out.content_type);
  };
  server.Get(R"(/filters)", bridge);
  server.Post(R"(/datasets)", bridge);
  server.Get(R"(/datasets/[^/]+)", bridge);
  server.Post(R"(/datasets/[^/]+/mapper)", bridge);
  server.Options(R"(/.*)", bridge);
  if (!config_.static_dir.empty()) server.set_mount_point("/", config_.static_dir.string());
}

}  // namespace tda::service
