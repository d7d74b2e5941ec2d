#include "tda/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "tda/error.hpp"
#include "tda/parallel.hpp"
#include "tda/random.hpp"

namespace tda {

Landscape::Landscape(LandscapeGrid grid, std::size_t levels)
    : Landscape(grid, levels, std::vector<double>(levels * grid.count, 0.0)) {}

Landscape::Landscape(LandscapeGrid grid, std::size_t levels, std::vector<double> values)
    : grid_(grid), levels_(levels), values_(std::move(values)) {
  if (levels_ == 0) throw InputError("landscape: at least one level required");
  if (grid_.count < 2) throw InputError("landscape: grid needs at least 2 samples");
  if (!(grid_.t_max > 0.0) || !std::isfinite(grid_.t_max)) throw InputError("landscape: t_max must be positive");
  if (values_.size() != levels_ * grid_.count) throw InputError("landscape: value count mismatch");
}

double tent(double birth, double death, double t) {
  if (t < birth || t > death) return 0.0;
  const double mid = 0.5 * (birth + death);
  return t <= mid ? t - birth : death - t;
}

Landscape landscape_from_diagram(const PersistenceDiagram& dgm, int dim, std::size_t levels,
                                 LandscapeGrid grid, std::vector<std::string>* warnings) {
  Landscape out(grid, levels);
  std::vector<std::pair<double, double>> bars;
  for (const auto& p : dgm) {
    if (p.dim != dim) continue;
    double death = p.death;
    if (p.essential()) {
      death = std::max(grid.t_max, p.birth);
      if (warnings) {
        std::ostringstream msg;
        msg << "essential dim-" << dim << " point born at " << p.birth << " truncated to death " << death;
        warnings->push_back(msg.str());
      }
    }
    bars.emplace_back(p.birth, death);
  }
  std::vector<double> heights;
  for (std::size_t j = 0; j < grid.count; ++j) {
    const double t = grid.at(j);
    heights.clear();
    for (const auto& [b, d] : bars) {
      const double h = tent(b, d, t);
      if (h > 0.0) heights.push_back(h);
    }
    const std::size_t k = std::min(levels, heights.size());
    std::partial_sort(heights.begin(), heights.begin() + static_cast<std::ptrdiff_t>(k), heights.end(),
                      std::greater<>());
    for (std::size_t level = 1; level <= k; ++level) out(level, j) = heights[level - 1];
  }
  return out;
}

Landscape average_landscape(std::span<const Landscape> landscapes) {
  if (landscapes.empty()) throw InputError("average landscape: no inputs");
  const auto& first = landscapes.front();
  std::vector<double> sum(first.values().size(), 0.0);
  for (const auto& l : landscapes) {
    if (!(l.grid() == first.grid()) || l.levels() != first.levels())
      throw InputError("average landscape: grid or level mismatch");
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += l.values()[i];
  }
  const double inv = 1.0 / static_cast<double>(landscapes.size());
  for (auto& v : sum) v *= inv;
  return Landscape(first.grid(), first.levels(), std::move(sum));
}

std::vector<std::string> check_landscape(const Landscape& l) {
  std::vector<std::string> problems;
  const auto& g = l.grid();
  const double dt = g.t_max / static_cast<double>(g.count - 1);
  for (std::size_t k = 1; k <= l.levels(); ++k) {
    for (std::size_t j = 0; j < g.count; ++j) {
      const double v = l(k, j);
      if (!(v >= 0.0)) problems.push_back("negative value at level " + std::to_string(k));
      if (k < l.levels() && l(k + 1, j) > v)
        problems.push_back("level " + std::to_string(k + 1) + " exceeds level " + std::to_string(k));
      if (j > 0 && std::abs(v - l(k, j - 1)) > dt + 1e-12)
        problems.push_back("level " + std::to_string(k) + " is not 1-Lipschitz");
    }
  }
  return problems;
}

PersistenceDiagram pipeline_diagram(const MetricSpace& data, FiltrationKind kind, double scale, int max_hom_dim) {
  const int max_dim = std::min<int>(max_hom_dim + 1, static_cast<int>(data.size()) - 1);
  if (kind == FiltrationKind::cech) {
    const auto* pts = data.points();
    if (!pts) throw InputError("cech filtration needs a point cloud");
    return compute_persistence(cech_filtration(*pts, scale, max_dim), max_hom_dim);
  }
  return compute_persistence(rips_filtration(data, scale, max_dim), max_hom_dim);
}

Landscape pipeline_landscape(const MetricSpace& data, const LandscapePipeline& pipeline) {
  const auto dgm = pipeline_diagram(data, pipeline.filtration, pipeline.scale, pipeline.dim);
  return landscape_from_diagram(dgm, pipeline.dim, pipeline.levels, pipeline.grid);
}

std::vector<Landscape> subsample_landscapes(const MetricSpace& data, std::size_t m, std::size_t count,
                                            const LandscapePipeline& pipeline, std::uint64_t seed,
                                            Subsampling mode) {
  if (m == 0 || m > data.size()) throw InputError("subsample size must lie in [1, n]");
  if (count == 0) throw InputError("subsample count must be positive");
  std::vector<Landscape> out(count, Landscape(pipeline.grid, pipeline.levels));
  parallel_for(count, [&](std::size_t i) {
    if (mode == Subsampling::identity) {
      out[i] = pipeline_landscape(data, pipeline);
      return;
    }
    Rng rng = Rng::stream(seed, i);
    const auto idx = rng.sample_with_replacement(data.size(), m);
    out[i] = pipeline_landscape(data.subset(idx), pipeline);
  });
  return out;
}

Landscape subsample_average_landscape(const MetricSpace& data, std::size_t m, std::size_t count,
                                      const LandscapePipeline& pipeline, std::uint64_t seed,
                                      Subsampling mode) {
  const auto all = subsample_landscapes(data, m, count, pipeline, seed, mode);
  return average_landscape(all);
}

std::vector<double> landscape_features(const PersistenceDiagram& dgm, std::span<const int> dims,
                                       std::size_t levels, LandscapeGrid grid) {
  std::vector<double> row;
  row.reserve(dims.size() * levels * grid.count);
  for (int d : dims) {
    const auto l = landscape_from_diagram(dgm, d, levels, grid);
    row.insert(row.end(), l.values().begin(), l.values().end());
  }
  return row;
}

}  // namespace tda
