#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tda/landscape.hpp"
#include "tda/metric.hpp"
#include "tda/persistence.hpp"

namespace tda {

enum class BandKind { diagram, landscape };

/// A confidence region at level 1 - alpha together with how it was produced.
/// Diagram bands carry a single bottleneck radius in eta; landscape bands carry
/// one half-width per grid node around `center`.
struct ConfidenceBand {
  BandKind kind = BandKind::diagram;
  double alpha = 0.05;
  std::vector<double> eta;
  std::vector<double> center;
  std::string method;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
  /// Per-replicate statistic whose quantile gave eta.
  std::vector<double> statistics;

  double radius() const { return eta.empty() ? 0.0 : eta.front(); }
};

/// Order statistic at rank ceil((1 - alpha) N), 1-based.
double upper_quantile(std::vector<double> values, double alpha);

/// eta = 2 q, q the (1 - alpha) quantile of Hausdorff(subsample, data) over
/// N subsamples of size b drawn without replacement.
ConfidenceBand subsampling_eta(const PointCloud& data, std::size_t b, double alpha, std::size_t replicates,
                               std::uint64_t seed, std::vector<std::string>* warnings = nullptr);

/// Heuristic default subsample size ceil(n / (2 log n)).
std::size_t default_subsample_size(std::size_t n);

struct BootstrapPipeline {
  FiltrationKind filtration = FiltrationKind::rips;
  double scale = 1.0;
  int max_hom_dim = 1;
};

/// eta = (1 - alpha) quantile of d_b(dgm(resample), dgm(data)) over N
/// resamples of size n drawn with replacement. For a dissimilarity matrix the
/// rows and columns are resampled jointly.
ConfidenceBand bottleneck_bootstrap(const MetricSpace& data, const BootstrapPipeline& pipeline, double alpha,
                                    std::size_t replicates, std::uint64_t seed);

/// Uniform band for the mean of `level`: statistic
/// sup_t |n^{-1/2} sum_i xi_i (lambda_i(t) - mean(t))| with xi_i ~ N(0, 1),
/// half-width quantile / sqrt(n).
ConfidenceBand landscape_band(std::span<const Landscape> landscapes, double alpha, std::size_t replicates,
                              std::uint64_t seed, std::size_t level = 1);

/// Outside the diagram band: death - birth > 2 eta.
bool is_significant(const DiagramPoint& p, double eta);
std::size_t count_significant(const PersistenceDiagram& dgm, int dim, double eta);

}  // namespace tda
