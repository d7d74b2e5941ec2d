#include "tda/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <map>
#include <numeric>
#include <sstream>

#include "tda/error.hpp"

namespace tda {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<std::size_t>> groups(UnionFind& uf, const std::vector<std::size_t>& ids) {
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t local = 0; local < ids.size(); ++local) by_root[uf.find(local)].push_back(ids[local]);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("filter: bad " + what + " '" + s + "'");
  }
}

}  // namespace

std::string FilterSpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case FilterKind::eccentricity: return "eccentricity";
    case FilterKind::centrality: return "centrality";
    case FilterKind::coordinate: os << "coordinate:" << coordinate; break;
    case FilterKind::distance_to_point: os << "distance_to_point:" << reference; break;
    case FilterKind::density: os << "density:" << bandwidth; break;
  }
  return os.str();
}

FilterSpec FilterSpec::parse(const std::string& text, std::size_t dim) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  FilterSpec f;
  if (head == "eccentricity" && arg.empty()) {
    f.kind = FilterKind::eccentricity;
  } else if (head == "centrality" && arg.empty()) {
    f.kind = FilterKind::centrality;
  } else if (head == "height" && arg.empty()) {
    if (dim == 0) throw InputError("filter: 'height' needs point coordinates");
    f.kind = FilterKind::coordinate;
    f.coordinate = dim - 1;
  } else if (head == "coordinate" && !arg.empty()) {
    f.kind = FilterKind::coordinate;
    const double j = parse_number(arg, "coordinate index");
    if (j < 0 || j != std::floor(j)) throw InputError("filter: bad coordinate index '" + arg + "'");
    f.coordinate = static_cast<std::size_t>(j);
  } else if (head == "distance_to_point" && !arg.empty()) {
    f.kind = FilterKind::distance_to_point;
    const double i = parse_number(arg, "reference index");
    if (i < 0 || i != std::floor(i)) throw InputError("filter: bad reference index '" + arg + "'");
    f.reference = static_cast<std::size_t>(i);
  } else if (head == "density" && !arg.empty()) {
    f.kind = FilterKind::density;
    f.bandwidth = parse_number(arg, "bandwidth");
    if (!(f.bandwidth > 0)) throw InputError("filter: density bandwidth must be positive");
  } else {
    throw InputError("filter: unknown filter '" + text + "'");
  }
  return f;
}

std::vector<double> filter_values(const MetricSpace& data, const FilterSpec& filter) {
  const std::size_t n = data.size();
  std::vector<double> out(n, 0.0);
  switch (filter.kind) {
    case FilterKind::eccentricity:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] = std::max(out[i], data.distance(i, j));
      break;
    case FilterKind::centrality:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += data.distance(i, j);
      break;
    case FilterKind::coordinate: {
      const auto* pts = data.points();
      if (!pts) throw InputError("filter: coordinate filter needs point coordinates");
      if (filter.coordinate >= pts->dim()) throw InputError("filter: coordinate index out of range");
      for (std::size_t i = 0; i < n; ++i) out[i] = (*pts)[i][filter.coordinate];
      break;
    }
    case FilterKind::distance_to_point:
      if (filter.reference >= n) throw InputError("filter: reference point out of range");
      for (std::size_t i = 0; i < n; ++i) out[i] = data.distance(i, filter.reference);
      break;
    case FilterKind::density: {
      if (!(filter.bandwidth > 0.0) || !std::isfinite(filter.bandwidth))
        throw InputError("filter: density bandwidth must be positive");
      const double inv = 1.0 / (2.0 * filter.bandwidth * filter.bandwidth);
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          const double d = data.distance(i, j);
          s += std::exp(-d * d * inv);
        }
        out[i] = s / static_cast<double>(n);
      }
      break;
    }
  }
  return out;
}

std::string ClusteringConfig::describe() const {
  std::ostringstream os;
  switch (method) {
    case ClusterMethod::epsilon: os << "epsilon:" << epsilon; break;
    case ClusterMethod::knn: os << "knn:" << k; break;
    case ClusterMethod::linkage: os << "linkage:" << epsilon; break;
  }
  return os.str();
}

ClusteringConfig ClusteringConfig::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  ClusteringConfig c;
  if (head == "epsilon" || head == "linkage") {
    c.method = head == "epsilon" ? ClusterMethod::epsilon : ClusterMethod::linkage;
    if (!arg.empty()) c.epsilon = parse_number(arg, "clustering threshold");
    if (!(c.epsilon > 0.0) || !std::isfinite(c.epsilon)) throw InputError("clustering: threshold must be positive");
  } else if (head == "knn") {
    c.method = ClusterMethod::knn;
    if (!arg.empty()) {
      const double k = parse_number(arg, "neighbour count");
      if (k < 1 || k != std::floor(k)) throw InputError("clustering: k must be a positive integer");
      c.k = static_cast<std::size_t>(k);
    }
  } else {
    throw InputError("clustering: unknown method '" + text + "'");
  }
  return c;
}

Clusterer::Clusterer(const MetricSpace& data, ClusteringConfig config,
                     std::optional<std::chrono::steady_clock::time_point> deadline)
    : data_(data), config_(config) {
  const std::size_t n = data.size();
  const auto check = [&] {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw MapperCancelled("mapper: time limit exceeded");
  };
  switch (config_.method) {
    case ClusterMethod::epsilon:
      if (!(config_.epsilon > 0.0)) throw InputError("clustering: epsilon must be positive");
      neighbors_.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i % 256 == 0) check();
        for (std::size_t j = i + 1; j < n; ++j)
          if (data.distance(i, j) <= config_.epsilon) {
            neighbors_[i].push_back(j);
            neighbors_[j].push_back(i);
          }
      }
      break;
    case ClusterMethod::knn: {
      if (config_.k == 0) throw InputError("clustering: k must be positive");
      neighbors_.resize(n);
      std::vector<std::pair<double, std::size_t>> cand;
      for (std::size_t i = 0; i < n; ++i) {
        if (i % 256 == 0) check();
        cand.clear();
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) cand.emplace_back(data.distance(i, j), j);
        const std::size_t k = std::min(config_.k, cand.size());
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end());
        for (std::size_t t = 0; t < k; ++t) {
          neighbors_[i].push_back(cand[t].second);
          neighbors_[cand[t].second].push_back(i);
        }
      }
      for (auto& nb : neighbors_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      }
      break;
    }
    case ClusterMethod::linkage:
      if (!(config_.epsilon > 0.0)) throw InputError("clustering: linkage threshold must be positive");
      break;
  }
}

std::vector<std::vector<std::size_t>> Clusterer::partition(const std::vector<std::size_t>& ids) const {
  if (ids.empty()) return {};
  UnionFind uf(ids.size());
  if (config_.method == ClusterMethod::linkage) {
    // Kruskal over the preimage: merging every edge up to the cut height is
    // exactly cutting the single-linkage dendrogram there.
    std::vector<std::tuple<double, std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b) edges.emplace_back(data_.distance(ids[a], ids[b]), a, b);
    std::sort(edges.begin(), edges.end());
    for (const auto& [h, a, b] : edges) {
      if (h > config_.epsilon) break;
      uf.unite(a, b);
    }
  } else {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t a = 0; a < ids.size(); ++a) local.emplace(ids[a], a);
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t nb : neighbors_[ids[a]])
        if (auto it = local.find(nb); it != local.end()) uf.unite(a, it->second);
  }
  return groups(uf, ids);
}

std::vector<std::vector<std::size_t>> cluster_preimage(const MetricSpace& data, const std::vector<std::size_t>& ids,
                                                       const ClusteringConfig& config) {
  if (ids.empty()) throw InputError("clustering: empty point set");
  return Clusterer(data, config).partition(ids);
}

MapperGraph mapper(const MetricSpace& data, const std::vector<double>& filter, const Cover1D& cover,
                   const ClusteringConfig& clustering, const MapperOptions& options) {
  if (filter.size() != data.size()) throw InputError("mapper: filter length does not match data size");
  for (double v : filter)
    if (!std::isfinite(v)) throw InputError("mapper: non-finite filter value");
  const Clusterer clusterer(data, clustering, options.deadline);

  MapperGraph g;
  g.params = {"", cover.resolution, cover.gain, clustering.describe()};
  std::vector<std::vector<std::size_t>> nodes_of_point(data.size());
  for (std::size_t u = 0; u < cover.intervals.size(); ++u) {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
      throw MapperCancelled("mapper: time limit exceeded");
    std::vector<std::size_t> preimage;
    for (std::size_t i = 0; i < filter.size(); ++i)
      if (cover.intervals[u].contains(filter[i])) preimage.push_back(i);
    if (preimage.empty()) continue;
    const auto clusters = clusterer.partition(preimage);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      MapperNode node;
      node.id = g.nodes.size();
      node.interval = u;
      node.cluster = c;
      node.members = clusters[c];
      node.filter_min = std::numeric_limits<double>::infinity();
      node.filter_max = -std::numeric_limits<double>::infinity();
      double sum = 0.0;
      for (std::size_t m : node.members) {
        node.filter_min = std::min(node.filter_min, filter[m]);
        node.filter_max = std::max(node.filter_max, filter[m]);
        sum += filter[m];
        nodes_of_point[m].push_back(node.id);
      }
      node.filter_mean = sum / static_cast<double>(node.members.size());
      g.nodes.push_back(std::move(node));
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> shared;
  for (const auto& owners : nodes_of_point)
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) ++shared[{owners[a], owners[b]}];
  for (const auto& [key, count] : shared) g.edges.push_back({key.first, key.second, count});
  return g;
}

MapperGraph run_mapper(const MetricSpace& data, const MapperSettings& settings, std::vector<std::string>* warnings,
                       const MapperOptions& options) {
  const auto* pts = data.points();
  const FilterSpec spec = FilterSpec::parse(settings.filter, pts ? pts->dim() : 0);
  if (!(settings.gain > 0.0 && settings.gain < 1.0)) throw InputError("gain must lie in (0, 1)");
  const auto f = filter_values(data, spec);
  const auto [lo_it, hi_it] = std::minmax_element(f.begin(), f.end());
  const double lo = *lo_it, hi = *hi_it;

  Cover1D cover;
  if (settings.intervals) {
    if (*settings.intervals == 0) throw InputError("interval count must be positive");
    cover = build_cover_1d_by_count(lo, hi, *settings.intervals, settings.gain);
  } else if (settings.resolution) {
    if (!(*settings.resolution > 0.0) || !std::isfinite(*settings.resolution))
      throw InputError("resolution must be positive");
    cover = build_cover_1d(lo, hi, *settings.resolution, settings.gain);
  } else {
    throw InputError("either resolution or an interval count is required");
  }

  if (warnings) {
    if (settings.gain >= 0.5) warnings->push_back(kHigherSimplexWarning);
    std::vector<double> sorted(f);
    std::sort(sorted.begin(), sorted.end());
    double widest = 0.0;
    for (std::size_t i = 1; i < sorted.size(); ++i) widest = std::max(widest, sorted[i] - sorted[i - 1]);
    if (cover.resolution < widest)
      warnings->push_back("resolution is below the largest gap between filter values; some intervals may be empty");
  }

  auto graph = mapper(data, f, cover, settings.clustering, options);
  graph.params.filter = spec.name();
  return graph;
}

std::vector<Simplex> mapper_nerve(const MapperGraph& graph, int max_dim) {
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(graph.nodes.size());
  for (const auto& n : graph.nodes) sets.push_back(n.members);
  return nerve(sets, max_dim);
}

}  // namespace tda
