#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "tda/complex.hpp"
#include "tda/metric.hpp"

namespace tda {

enum class FilterKind { eccentricity, centrality, coordinate, distance_to_point, density };

/// A real-valued lens on the data.
struct FilterSpec {
  FilterKind kind = FilterKind::eccentricity;
  std::size_t coordinate = 0;   ///< coordinate(j)
  std::size_t reference = 0;    ///< distance_to_point: index of the reference point
  double bandwidth = 1.0;       ///< density: Gaussian bandwidth h

  /// Canonical text form: "eccentricity", "centrality", "coordinate:j",
  /// "distance_to_point:i", "density:h".
  std::string name() const;
  /// Parses the canonical form. "height" is accepted for the last coordinate
  /// of a `dim`-dimensional cloud. Unknown names throw InputError.
  static FilterSpec parse(const std::string& text, std::size_t dim = 0);
};

/// One value per point. Eccentricity max_y d(x,y), centrality sum_y d(x,y),
/// density (1/n) sum_y exp(-d(x,y)^2 / 2h^2).
std::vector<double> filter_values(const MetricSpace& data, const FilterSpec& filter);

enum class ClusterMethod {
  epsilon,   ///< connected components of the epsilon-neighbourhood graph
  knn,       ///< connected components of the symmetrised k-NN graph
  linkage    ///< single-linkage dendrogram cut at a threshold
};

struct ClusteringConfig {
  ClusterMethod method = ClusterMethod::epsilon;
  double epsilon = 0.4;     ///< epsilon, or the linkage cut height
  std::size_t k = 5;        ///< neighbours for knn

  /// "epsilon:0.4", "knn:5" or "linkage:0.3"; the inverse of parse.
  std::string describe() const;
  static ClusteringConfig parse(const std::string& text);
};

class MapperCancelled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partitions subsets of one data set. Graph methods build the neighbour graph
/// over the whole data once and take components of the induced subgraph;
/// linkage clusters each subset on its own.
class Clusterer {
 public:
  /// Building the neighbour graph is quadratic; with a deadline it throws
  /// MapperCancelled once the deadline has passed.
  Clusterer(const MetricSpace& data, ClusteringConfig config,
            std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

  /// Clusters of `ids` (sorted members, clusters ordered by smallest member).
  std::vector<std::vector<std::size_t>> partition(const std::vector<std::size_t>& ids) const;

 private:
  const MetricSpace& data_;
  ClusteringConfig config_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

/// One-off partition of `ids`.
std::vector<std::vector<std::size_t>> cluster_preimage(const MetricSpace& data, const std::vector<std::size_t>& ids,
                                                       const ClusteringConfig& config);

struct MapperNode {
  std::size_t id = 0;
  std::size_t interval = 0;
  std::size_t cluster = 0;
  std::vector<std::size_t> members;
  double filter_min = 0.0;
  double filter_mean = 0.0;
  double filter_max = 0.0;
};

struct MapperEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t weight = 0;  ///< number of shared points
};

struct MapperParams {
  std::string filter;
  double resolution = 0.0;
  double gain = 0.0;
  std::string clustering;
};

struct MapperGraph {
  std::vector<MapperNode> nodes;
  std::vector<MapperEdge> edges;
  MapperParams params;
};

struct MapperOptions {
  /// Checked between cover intervals; computation throws MapperCancelled once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Nodes are (interval, cluster) pairs in that order; an edge joins two nodes
/// whose member sets intersect. Intervals with empty preimage give no node.
MapperGraph mapper(const MetricSpace& data, const std::vector<double>& filter, const Cover1D& cover,
                   const ClusteringConfig& clustering, const MapperOptions& options = {});

/// Everything needed to run Mapper from names and numbers, as the CLI and the
/// service receive it. Exactly one of resolution and intervals is used;
/// intervals wins when both are set.
struct MapperSettings {
  std::string filter = "eccentricity";
  std::optional<double> resolution;
  std::optional<std::size_t> intervals;
  double gain = 0.3;
  ClusteringConfig clustering{};
};

inline constexpr const char* kHigherSimplexWarning = "nerve may contain higher simplices; rendered as graph";

/// Filter evaluation, cover construction over [min f, max f] and mapper().
/// Settings problems throw InputError. Advisory messages (gain >= 0.5,
/// resolution finer than the filter spacing) go to `warnings`.
MapperGraph run_mapper(const MetricSpace& data, const MapperSettings& settings,
                       std::vector<std::string>* warnings = nullptr, const MapperOptions& options = {});

/// Nerve of the node member sets up to max_dim (triangles appear only when
/// three clusters share a point, which gain < 0.5 rules out).
std::vector<Simplex> mapper_nerve(const MapperGraph& graph, int max_dim);

}  // namespace tda
