#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "tda/error.hpp"
#include "tda/stats.hpp"

namespace tda {
namespace {

TEST(Quantile, OrderStatistic) {
  const std::vector<double> v{5, 1, 4, 2, 3, 10, 9, 8, 7, 6};
  EXPECT_EQ(upper_quantile(v, 0.1), 9.0);   // ceil(9) = 9th smallest
  EXPECT_EQ(upper_quantile(v, 0.05), 10.0);  // ceil(9.5) = 10th
  EXPECT_EQ(upper_quantile(v, 0.5), 5.0);
  EXPECT_EQ(upper_quantile(v, 0.99), 1.0);
  EXPECT_THROW(upper_quantile(v, 0.0), InputError);
  EXPECT_THROW(upper_quantile({}, 0.1), InputError);
}

TEST(SubsamplingEta, TwoPoints) {
  const PointCloud two(1, {0, 10});
  for (double alpha : {0.01, 0.05, 0.5}) EXPECT_EQ(subsampling_eta(two, 1, alpha, 50, 3).radius(), 20.0);
}

TEST(SubsamplingEta, DegenerateCases) {
  const auto circle = testing::uniform_circle(30, 1);
  EXPECT_EQ(subsampling_eta(circle, 30, 0.05, 40, 3).radius(), 0.0);
  const PointCloud same(2, std::vector<double>(20, 1.5));
  EXPECT_EQ(subsampling_eta(same, 3, 0.05, 40, 3).radius(), 0.0);
  EXPECT_THROW(subsampling_eta(circle, 0, 0.05, 40, 3), InputError);
  EXPECT_THROW(subsampling_eta(circle, 31, 0.05, 40, 3), InputError);
  std::vector<std::string> warnings;
  subsampling_eta(circle, 5, 0.05, 10, 3, &warnings);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(SubsamplingEta, DefaultSubsampleSize) {
  EXPECT_EQ(default_subsample_size(500), static_cast<std::size_t>(std::ceil(500 / (2 * std::log(500.0)))));
  EXPECT_GE(default_subsample_size(2), 1u);
}

TEST(Bootstrap, IdenticalPointsAndSinglePoint) {
  const BootstrapPipeline p{FiltrationKind::rips, 1.0, 1};
  EXPECT_EQ(bottleneck_bootstrap(MetricSpace(PointCloud(2, std::vector<double>(16, 0.25))), p, 0.05, 20, 1).radius(), 0.0);
  EXPECT_EQ(bottleneck_bootstrap(MetricSpace(PointCloud(2, {3, 4})), p, 0.05, 20, 1).radius(), 0.0);
  EXPECT_THROW(bottleneck_bootstrap(MetricSpace(PointCloud(2, {3, 4})), p, 0.05, 19, 1), InputError);
}

TEST(Bootstrap, MatrixInputResamplesJointlyAndNotes) {
  const auto circle = testing::uniform_circle(25, 4, 0.05);
  const MetricSpace matrix(DissimilarityMatrix::from_points(circle));
  const BootstrapPipeline p{FiltrationKind::rips, 2.0, 1};
  const auto a = bottleneck_bootstrap(matrix, p, 0.05, 30, 8);
  const auto b = bottleneck_bootstrap(MetricSpace(circle), p, 0.05, 30, 8);
  EXPECT_EQ(a.statistics, b.statistics);
  EXPECT_GT(a.radius(), 0.0);
  EXPECT_FALSE(a.notes.empty());
  EXPECT_TRUE(b.notes.empty());
}

TEST(Bands, BitIdenticalUnderSharedSeed) {
  const auto circle = testing::uniform_circle(40, 6, 0.05);
  EXPECT_EQ(subsampling_eta(circle, 10, 0.05, 60, 77).statistics, subsampling_eta(circle, 10, 0.05, 60, 77).statistics);
  const BootstrapPipeline p{FiltrationKind::rips, 2.0, 1};
  EXPECT_EQ(bottleneck_bootstrap(MetricSpace(circle), p, 0.05, 25, 77).statistics,
            bottleneck_bootstrap(MetricSpace(circle), p, 0.05, 25, 77).statistics);
  const auto ls = subsample_landscapes(MetricSpace(circle), 12, 20,
                                       LandscapePipeline{FiltrationKind::rips, 2.0, 1, 1, LandscapeGrid{2.0, 51}}, 5);
  const auto x = landscape_band(ls, 0.05, 100, 77), y = landscape_band(ls, 0.05, 100, 77);
  EXPECT_EQ(x.statistics, y.statistics);
  EXPECT_EQ(x.eta, y.eta);
  EXPECT_NE(landscape_band(ls, 0.05, 100, 78).statistics, x.statistics);
}

TEST(Bands, EtaNonIncreasingInAlpha) {
  const auto circle = testing::uniform_circle(60, 9, 0.05);
  const BootstrapPipeline p{FiltrationKind::rips, 2.0, 1};
  const auto ls = subsample_landscapes(MetricSpace(circle), 12, 30,
                                       LandscapePipeline{FiltrationKind::rips, 2.0, 1, 1, LandscapeGrid{2.0, 51}}, 5);
  double prev_sub = INFINITY, prev_boot = INFINITY, prev_land = INFINITY;
  for (double alpha : {0.01, 0.05, 0.2}) {
    const double sub = subsampling_eta(circle, 15, alpha, 100, 4).radius();
    const double boot = bottleneck_bootstrap(MetricSpace(circle), p, alpha, 40, 4).radius();
    const double land = landscape_band(ls, alpha, 200, 4).radius();
    EXPECT_LE(sub, prev_sub);
    EXPECT_LE(boot, prev_boot);
    EXPECT_LE(land, prev_land);
    prev_sub = sub;
    prev_boot = boot;
    prev_land = land;
  }
}

TEST(LandscapeBand, IdenticalLandscapesGiveZeroWidth) {
  const auto l = landscape_from_diagram(PersistenceDiagram({{1, 0.1, 0.9}}), 1, 1, LandscapeGrid{1.0, 21});
  const std::vector<Landscape> same(5, l);
  const auto band = landscape_band(same, 0.05, 50, 1);
  for (double e : band.eta) EXPECT_EQ(e, 0.0);
  EXPECT_EQ(band.center, std::vector<double>(l.level(1).begin(), l.level(1).end()));
}

TEST(LandscapeBand, SymmetricPairClosedForm) {
  const LandscapeGrid g{2.0, 41};
  const auto base = landscape_from_diagram(PersistenceDiagram({{1, 0.2, 1.8}}), 1, 1, g);
  const auto bump = landscape_from_diagram(PersistenceDiagram({{1, 0.5, 1.1}}), 1, 1, g);
  std::vector<double> plus(base.values()), minus(base.values());
  double sup_bump = 0;
  for (std::size_t j = 0; j < g.count; ++j) {
    plus[j] += bump.values()[j];
    minus[j] -= bump.values()[j];
    sup_bump = std::max(sup_bump, bump.values()[j]);
  }
  const std::vector<Landscape> pair{Landscape(g, 1, plus), Landscape(g, 1, minus)};
  const std::size_t N = 400;
  const auto band = landscape_band(pair, 0.05, N, 12);
  // Replicate r: |xi_1 - xi_2| sup|bump| / sqrt(2), with xi from stream (12, r).
  std::vector<double> expected(N);
  for (std::size_t r = 0; r < N; ++r) {
    Rng rng = Rng::stream(12, r);
    const double x1 = rng.normal(), x2 = rng.normal();
    expected[r] = std::abs(x1 - x2) * sup_bump / std::sqrt(2.0);
    EXPECT_NEAR(band.statistics[r], expected[r], 1e-12);
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_NEAR(band.radius(), expected[379] / std::sqrt(2.0), 1e-12);
  for (std::size_t j = 0; j < g.count; ++j) EXPECT_NEAR(band.center[j], base.values()[j], 1e-15);
}

TEST(LandscapeBand, CoversHeldOutMeanOnCircleSubsamples) {
  const MetricSpace data(testing::uniform_circle(300, 21, 0.05));
  const LandscapePipeline p{FiltrationKind::rips, 2.0, 1, 1, LandscapeGrid{2.0, 101}};
  const auto pool = subsample_landscapes(data, 15, 4000, p, 1000);
  const auto truth = average_landscape(pool);
  const std::size_t trials = 60, ell = 60;
  std::size_t covered = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto ls = subsample_landscapes(data, 15, ell, p, 2000 + t);
    const auto band = landscape_band(ls, 0.05, 300, 3000 + t);
    bool inside = true;
    for (std::size_t j = 0; j < p.grid.count; ++j)
      if (std::abs(band.center[j] - truth.values()[j]) > band.eta[j]) inside = false;
    covered += inside;
  }
  const double rate = static_cast<double>(covered) / trials;
  EXPECT_GE(rate, 0.9 - 3 * std::sqrt(0.09 / trials));
}

TEST(Significance, HandCounts) {
  const PersistenceDiagram d({{1, 0, 1}, {1, 0.2, 0.5}, {1, 0.1, 0.7}, {1, 0, kInfinity}, {0, 0, 5}});
  EXPECT_TRUE(is_significant({1, 0, 1}, 0.25));
  EXPECT_FALSE(is_significant({1, 0, 0.5}, 0.25));  // on the boundary
  EXPECT_EQ(count_significant(d, 1, 0.25), 3u);     // (0,1), (0.1,0.7), (0,inf)
  EXPECT_EQ(count_significant(d, 1, 0.0), 4u);
  EXPECT_EQ(count_significant(d, 1, 10), 1u);
  EXPECT_EQ(count_significant(d, 0, 2.4), 1u);
  EXPECT_EQ(count_significant(d, 0, 2.5), 0u);
}

}  // namespace
}  // namespace tda
