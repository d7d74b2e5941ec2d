#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tda/metric.hpp"
#include "tda/persistence.hpp"

namespace tda {

/// Uniform sampling t_j = j * t_max / (count - 1), j = 0..count-1.
struct LandscapeGrid {
  double t_max = 1.0;
  std::size_t count = 1000;

  double at(std::size_t j) const { return t_max * static_cast<double>(j) / static_cast<double>(count - 1); }
  friend bool operator==(const LandscapeGrid&, const LandscapeGrid&) = default;
};

/// Discretised persistence landscape: `levels` rows over a shared grid.
class Landscape {
 public:
  Landscape(LandscapeGrid grid, std::size_t levels);
  Landscape(LandscapeGrid grid, std::size_t levels, std::vector<double> values);

  const LandscapeGrid& grid() const { return grid_; }
  std::size_t levels() const { return levels_; }
  /// lambda(k, t_j) with k starting at 1.
  double operator()(std::size_t k, std::size_t j) const { return values_[(k - 1) * grid_.count + j]; }
  double& operator()(std::size_t k, std::size_t j) { return values_[(k - 1) * grid_.count + j]; }
  std::span<const double> level(std::size_t k) const {
    return {values_.data() + (k - 1) * grid_.count, grid_.count};
  }
  /// Row-major levels x grid.
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const Landscape&, const Landscape&) = default;

 private:
  LandscapeGrid grid_;
  std::size_t levels_;
  std::vector<double> values_;
};

/// Tent over (birth, death): t - birth up to the midpoint, death - t after, 0 outside.
double tent(double birth, double death, double t);

/// lambda(k, t_j) = k-th largest tent value among the dim-`dim` points.
/// Essential points are truncated to death = t_max; each truncation is
/// reported through `warnings` when given.
Landscape landscape_from_diagram(const PersistenceDiagram& dgm, int dim, std::size_t levels,
                                 LandscapeGrid grid, std::vector<std::string>* warnings = nullptr);

/// Pointwise mean. Grids and level counts must agree.
Landscape average_landscape(std::span<const Landscape> landscapes);

/// Lists violated landscape invariants (negativity, level order, 1-Lipschitz rows).
std::vector<std::string> check_landscape(const Landscape& l);

enum class FiltrationKind { rips, cech };

/// Filtration -> persistence -> landscape, as applied to one (sub)sample.
struct LandscapePipeline {
  FiltrationKind filtration = FiltrationKind::rips;
  double scale = 1.0;  ///< max edge (Rips) or max radius (Cech)
  int dim = 1;         ///< homology dimension summarised
  std::size_t levels = 3;
  LandscapeGrid grid{};
};

PersistenceDiagram pipeline_diagram(const MetricSpace& data, FiltrationKind kind, double scale, int max_hom_dim);
Landscape pipeline_landscape(const MetricSpace& data, const LandscapePipeline& pipeline);

enum class Subsampling {
  with_replacement,  ///< i.i.d. draws from the empirical measure
  identity           ///< the whole sample every time (degenerate, for checks)
};

/// Average of the landscapes of `count` subsamples of size m. Subsample i
/// draws from Rng::stream(seed, i), so results do not depend on threading.
Landscape subsample_average_landscape(const MetricSpace& data, std::size_t m, std::size_t count,
                                      const LandscapePipeline& pipeline, std::uint64_t seed,
                                      Subsampling mode = Subsampling::with_replacement);

/// Per-subsample landscapes behind subsample_average_landscape.
std::vector<Landscape> subsample_landscapes(const MetricSpace& data, std::size_t m, std::size_t count,
                                            const LandscapePipeline& pipeline, std::uint64_t seed,
                                            Subsampling mode = Subsampling::with_replacement);

/// Flattened feature row: for each dim in order, levels x grid values.
std::vector<double> landscape_features(const PersistenceDiagram& dgm, std::span<const int> dims,
                                       std::size_t levels, LandscapeGrid grid);

}  // namespace tda
