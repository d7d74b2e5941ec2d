#include "tda/stats.hpp"

#include <algorithm>
#include <cmath>

#include "tda/diagmetric.hpp"
#include "tda/error.hpp"
#include "tda/parallel.hpp"
#include "tda/random.hpp"

namespace tda {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
}

}  // namespace

double upper_quantile(std::vector<double> values, double alpha) {
  check_alpha(alpha);
  if (values.empty()) throw InputError("quantile of an empty sample");
  const double n = static_cast<double>(values.size());
  auto rank = static_cast<std::size_t>(std::ceil((1.0 - alpha) * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(rank - 1), values.end());
  return values[rank - 1];
}

std::size_t default_subsample_size(std::size_t n) {
  if (n < 3) return n;
  const double b = std::ceil(static_cast<double>(n) / (2.0 * std::log(static_cast<double>(n))));
  return std::clamp<std::size_t>(static_cast<std::size_t>(b), 1, n);
}

ConfidenceBand subsampling_eta(const PointCloud& data, std::size_t b, double alpha, std::size_t replicates,
                               std::uint64_t seed, std::vector<std::string>* warnings) {
  check_alpha(alpha);
  if (b == 0 || b > data.size()) throw InputError("subsample size must lie in [1, n]");
  if (replicates == 0) throw InputError("replicate count must be positive");
  if (replicates < 20 && warnings)
    warnings->push_back("fewer than 20 replicates; the quantile estimate is unstable");

  std::vector<double> h(replicates);
  parallel_for(replicates, [&](std::size_t r) {
    Rng rng = Rng::stream(seed, r);
    const auto idx = rng.sample_without_replacement(data.size(), b);
    h[r] = hausdorff(data.subset(idx), data);
  });

  ConfidenceBand band;
  band.kind = BandKind::diagram;
  band.alpha = alpha;
  band.eta = {2.0 * upper_quantile(h, alpha)};
  band.method = "subsampling";
  band.replicates = replicates;
  band.seed = seed;
  band.notes.push_back("subsample size " + std::to_string(b) + ", drawn without replacement");
  band.statistics = std::move(h);
  return band;
}

ConfidenceBand bottleneck_bootstrap(const MetricSpace& data, const BootstrapPipeline& pipeline, double alpha,
                                    std::size_t replicates, std::uint64_t seed) {
  check_alpha(alpha);
  if (replicates < 20) throw InputError("bottleneck bootstrap needs at least 20 replicates");
  if (pipeline.max_hom_dim < 0) throw InputError("homology dimension must be non-negative");

  const auto original = pipeline_diagram(data, pipeline.filtration, pipeline.scale, pipeline.max_hom_dim);
  std::vector<double> d(replicates);
  parallel_for(replicates, [&](std::size_t r) {
    Rng rng = Rng::stream(seed, r);
    const auto idx = rng.sample_with_replacement(data.size(), data.size());
    const auto dgm = pipeline_diagram(data.subset(idx), pipeline.filtration, pipeline.scale, pipeline.max_hom_dim);
    double worst = 0.0;
    for (int k = 0; k <= pipeline.max_hom_dim; ++k) worst = std::max(worst, bottleneck(dgm, original, k));
    d[r] = worst;
  });

  ConfidenceBand band;
  band.kind = BandKind::diagram;
  band.alpha = alpha;
  band.eta = {upper_quantile(d, alpha)};
  band.method = "bottleneck-bootstrap";
  band.replicates = replicates;
  band.seed = seed;
  if (!data.is_point_cloud())
    band.notes.push_back(
        "rows and columns of the dissimilarity matrix resampled jointly; validity of the bootstrap has not "
        "been proved for this variant");
  band.statistics = std::move(d);
  return band;
}

ConfidenceBand landscape_band(std::span<const Landscape> landscapes, double alpha, std::size_t replicates,
                              std::uint64_t seed, std::size_t level) {
  check_alpha(alpha);
  if (landscapes.size() < 2) throw InputError("landscape band needs at least two landscapes");
  if (replicates == 0) throw InputError("replicate count must be positive");
  const auto& first = landscapes.front();
  for (const auto& l : landscapes)
    if (!(l.grid() == first.grid()) || l.levels() != first.levels())
      throw InputError("landscape band: grid or level mismatch");
  if (level == 0 || level > first.levels()) throw InputError("landscape band: level out of range");

  const std::size_t n = landscapes.size();
  const std::size_t g = first.grid().count;
  // Mean as first row plus the mean offset from it, so identical inputs give
  // exactly zero deviations.
  const auto base = first.level(level);
  std::vector<double> shift(g, 0.0);
  for (const auto& l : landscapes) {
    const auto row = l.level(level);
    for (std::size_t j = 0; j < g; ++j) shift[j] += row[j] - base[j];
  }
  std::vector<double> mean(g);
  for (std::size_t j = 0; j < g; ++j) mean[j] = base[j] + shift[j] / static_cast<double>(n);

  const double root_n = std::sqrt(static_cast<double>(n));
  std::vector<double> stat(replicates);
  parallel_for(replicates, [&](std::size_t r) {
    Rng rng = Rng::stream(seed, r);
    std::vector<double> xi(n);
    for (auto& x : xi) x = rng.normal();
    std::vector<double> acc(g, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = landscapes[i].level(level);
      for (std::size_t j = 0; j < g; ++j) acc[j] += xi[i] * (row[j] - mean[j]);
    }
    double sup = 0.0;
    for (double a : acc) sup = std::max(sup, std::abs(a));
    stat[r] = sup / root_n;
  });

  ConfidenceBand band;
  band.kind = BandKind::landscape;
  band.alpha = alpha;
  band.eta.assign(g, upper_quantile(stat, alpha) / root_n);
  band.center = std::move(mean);
  band.method = "multiplier-bootstrap";
  band.replicates = replicates;
  band.seed = seed;
  band.notes.push_back("level " + std::to_string(level) + " of " + std::to_string(n) + " landscapes");
  band.statistics = std::move(stat);
  return band;
}

bool is_significant(const DiagramPoint& p, double eta) { return p.death - p.birth > 2.0 * eta; }

std::size_t count_significant(const PersistenceDiagram& dgm, int dim, double eta) {
  return static_cast<std::size_t>(
      std::count_if(dgm.begin(), dgm.end(), [&](const DiagramPoint& p) { return p.dim == dim && is_significant(p, eta); }));
}

}  // namespace tda
