#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "tda/complex.hpp"
#include "tda/diagmetric.hpp"
#include "tda/landscape.hpp"
#include "tda/mapper.hpp"
#include "tda/persistence.hpp"
#include "tda/random.hpp"

namespace {

tda::PointCloud noisy_circle(std::size_t n, std::uint64_t seed) {
  tda::Rng rng(seed);
  std::vector<double> c;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * rng.uniform01();
    c.push_back(std::cos(t) + 0.05 * rng.normal());
    c.push_back(std::sin(t) + 0.05 * rng.normal());
  }
  return tda::PointCloud(2, std::move(c));
}

std::vector<tda::DiagramPoint> random_diagram(std::size_t n, tda::Rng& rng) {
  std::vector<tda::DiagramPoint> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = rng.uniform01();
    out.push_back({1, b, b + rng.uniform01()});
  }
  return out;
}

void BM_RipsFiltration(benchmark::State& state) {
  const tda::MetricSpace data(noisy_circle(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(tda::rips_filtration(data, 0.6, 2));
}
BENCHMARK(BM_RipsFiltration)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_RipsPersistence(benchmark::State& state) {
  const tda::MetricSpace data(noisy_circle(static_cast<std::size_t>(state.range(0)), 1));
  const auto fc = tda::rips_filtration(data, 0.6, 2);
  state.counters["simplices"] = static_cast<double>(fc.size());
  for (auto _ : state) benchmark::DoNotOptimize(tda::compute_persistence(fc, 1));
}
BENCHMARK(BM_RipsPersistence)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Bottleneck(benchmark::State& state) {
  tda::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_diagram(n, rng), b = random_diagram(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tda::bottleneck(a, b));
}
BENCHMARK(BM_Bottleneck)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_Wasserstein(benchmark::State& state) {
  tda::Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_diagram(n, rng), b = random_diagram(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tda::wasserstein(a, b, 2));
}
BENCHMARK(BM_Wasserstein)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_Landscape(benchmark::State& state) {
  tda::Rng rng(4);
  const tda::PersistenceDiagram d(random_diagram(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(tda::landscape_from_diagram(d, 1, 5, tda::LandscapeGrid{2.0, 1000}));
}
BENCHMARK(BM_Landscape)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_Mapper(benchmark::State& state) {
  const tda::MetricSpace data(noisy_circle(static_cast<std::size_t>(state.range(0)), 5));
  tda::MapperSettings s;
  s.filter = "height";
  s.intervals = 10;
  s.gain = 0.3;
  s.clustering = tda::ClusteringConfig::parse("epsilon:0.2");
  for (auto _ : state) benchmark::DoNotOptimize(tda::run_mapper(data, s));
}
BENCHMARK(BM_Mapper)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
