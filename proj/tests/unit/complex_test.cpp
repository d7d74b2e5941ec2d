#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tda/complex.hpp"
#include "tda/error.hpp"

namespace tda {
namespace {

std::set<Simplex> simplex_set(const FilteredComplex& fc) {
  std::set<Simplex> s;
  for (const auto& fs : fc) s.insert(fs.simplex);
  return s;
}

double value_of(const FilteredComplex& fc, const Simplex& s) {
  for (const auto& fs : fc)
    if (fs.simplex == s) return fs.value;
  ADD_FAILURE() << "simplex missing";
  return NAN;
}

PointCloud unit_square() { return PointCloud(2, {0, 0, 1, 0, 1, 1, 0, 1}); }

TEST(Simplex, SortsAndRejectsRepeats) {
  const Simplex s{3, 1, 2};
  EXPECT_EQ(s.vertices(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(s.dim(), 2);
  EXPECT_THROW(Simplex({1, 1}), InputError);
  const auto f = s.facets();
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (Simplex{2, 3}));
  EXPECT_EQ(f[2], (Simplex{1, 2}));
}

TEST(FilteredComplex, RejectsMissingFaceAndNonMonotoneValues) {
  EXPECT_THROW(FilteredComplex({{Simplex{0}, 0}, {Simplex{0, 1}, 1}}), InputError);
  EXPECT_THROW(FilteredComplex({{Simplex{0}, 2}, {Simplex{1}, 0}, {Simplex{0, 1}, 1}}), InputError);
  EXPECT_THROW(FilteredComplex({{Simplex{0}, 0}, {Simplex{0}, 1}}), InputError);
}

TEST(FilteredComplex, ValidatorReportsEveryViolation) {
  const std::vector<FilteredSimplex> bad{{Simplex{0, 1}, 0.5}, {Simplex{0}, 1.0}};
  const auto problems = check_filtration(bad);
  EXPECT_GE(problems.size(), 2u);
  const std::vector<FilteredSimplex> good{{Simplex{0}, 0}, {Simplex{1}, 0}, {Simplex{0, 1}, 1}};
  EXPECT_TRUE(check_filtration(good).empty());
}

TEST(Rips, EquilateralTriangle) {
  const MetricSpace m(DissimilarityMatrix(3, {0, 1, 1, 1, 0, 1, 1, 1, 0}));
  const auto fc = rips_filtration(m, 1.0, 2);
  EXPECT_EQ(fc.size(), 7u);
  for (const auto& fs : fc) EXPECT_EQ(fs.value, fs.simplex.dim() == 0 ? 0.0 : 1.0);
}

TEST(Rips, ZeroThresholdKeepsVertices) {
  const auto fc = rips_filtration(MetricSpace(unit_square()), 0.0, 2);
  EXPECT_EQ(fc.size(), 4u);
  EXPECT_EQ(fc.max_dim(), 0);
}

TEST(Rips, UnitSquare) {
  const auto fc = rips_filtration(MetricSpace(unit_square()), 2.0, 3);
  EXPECT_EQ(fc.size(), 15u);
  EXPECT_EQ(value_of(fc, Simplex{0, 1}), 1.0);
  EXPECT_EQ(value_of(fc, Simplex{0, 2}), std::sqrt(2.0));
  EXPECT_EQ(value_of(fc, Simplex{0, 1, 2, 3}), std::sqrt(2.0));
  EXPECT_TRUE(check_filtration(fc.simplices()).empty());
}

TEST(Rips, ClampsDimensionWithWarning) {
  std::vector<std::string> warnings;
  const auto fc = rips_filtration(MetricSpace(unit_square()), 2.0, 7, &warnings);
  EXPECT_EQ(fc.max_dim(), 3);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Cech, Examples) {
  const double h = std::sqrt(3.0) / 2.0;
  const auto tri = cech_filtration(PointCloud(2, {0, 0, 1, 0, 0.5, h}), 1.0, 2);
  EXPECT_NEAR(value_of(tri, Simplex{0, 1}), 0.5, 1e-12);
  EXPECT_NEAR(value_of(tri, Simplex{0, 1, 2}), 1.0 / std::sqrt(3.0), 1e-9);

  const auto pair = cech_filtration(PointCloud(1, {0, 2}), 5.0, 1);
  EXPECT_NEAR(value_of(pair, Simplex{0, 1}), 1.0, 1e-12);

  const auto sq = cech_filtration(unit_square(), 1.0, 3);
  const double half_diag = std::sqrt(2.0) / 2.0;
  EXPECT_NEAR(value_of(sq, Simplex{0, 1}), 0.5, 1e-12);
  EXPECT_NEAR(value_of(sq, Simplex{0, 2}), half_diag, 1e-12);
  EXPECT_NEAR(value_of(sq, Simplex{0, 1, 2}), half_diag, 1e-9);
  EXPECT_NEAR(value_of(sq, Simplex{0, 1, 2, 3}), half_diag, 1e-9);
}

TEST(Cech, ObtuseTriangleUsesLongestEdge) {
  // The circumcircle is larger than the ball on the long side.
  const auto fc = cech_filtration(PointCloud(2, {0, 0, 4, 0, 2, 0.5}), 10.0, 2);
  EXPECT_NEAR(value_of(fc, Simplex{0, 1, 2}), 2.0, 1e-12);
}

TEST(MinimalEnclosingBall, MatchesSubsetOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng.uniform_index(3);
    const std::size_t n = 1 + rng.uniform_index(7);
    const auto cloud = testing::random_cloud(n, d, rng);
    std::vector<std::size_t> all(n);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      all[i] = i;
      rows.emplace_back(cloud[i].begin(), cloud[i].end());
    }
    EXPECT_NEAR(minimal_enclosing_radius(cloud, all), testing::oracle_meb_radius(rows), 1e-9)
        << "n=" << n << " d=" << d;
  }
}

TEST(Sandwich, RipsInsideCechInsideDoubleRips) {
  Rng rng(2024);
  int violations = 0;
  for (int cloud = 0; cloud < 100; ++cloud) {
    const std::size_t d = 2 + rng.uniform_index(2);
    const std::size_t n = 3 + rng.uniform_index(10);
    const auto pts = testing::random_cloud(n, d, rng);
    const MetricSpace space(pts);
    const int top = static_cast<int>(std::min<std::size_t>(n - 1, 4));
    for (double alpha : {0.05, 0.15, 0.3, 0.5, 0.8}) {
      const auto rips = simplex_set(rips_filtration(space, alpha, top));
      const auto cech = simplex_set(cech_filtration(pts, alpha, top));
      const auto rips2 = simplex_set(rips_filtration(space, 2 * alpha, top));
      if (!std::includes(cech.begin(), cech.end(), rips.begin(), rips.end())) ++violations;
      if (!std::includes(rips2.begin(), rips2.end(), cech.begin(), cech.end())) ++violations;
    }
  }
  EXPECT_EQ(violations, 0);
}

TEST(Sandwich, CechAndDoubleRipsShareOneSkeleton) {
  Rng rng(99);
  for (int cloud = 0; cloud < 50; ++cloud) {
    const auto pts = testing::random_cloud(8, 3, rng);
    for (double alpha : {0.1, 0.25, 0.4}) {
      const auto c = cech_filtration(pts, alpha, 1);
      const auto r = rips_filtration(MetricSpace(pts), 2 * alpha, 1);
      EXPECT_EQ(simplex_set(c), simplex_set(r));
    }
  }
}

TEST(Filtrations, OutputsPassValidator) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto pts = testing::random_cloud(9, 2, rng);
    EXPECT_TRUE(check_filtration(rips_filtration(MetricSpace(pts), 0.6, 3).simplices()).empty());
    EXPECT_TRUE(check_filtration(cech_filtration(pts, 0.3, 3).simplices()).empty());
  }
}

TEST(LowerStar, MaxRule) {
  const std::vector<Simplex> path{Simplex{0, 1}, Simplex{1, 2}};
  const std::vector<double> values{3, 1, 2};
  const auto fc = lower_star_filtration(path, values);
  EXPECT_EQ(fc.size(), 5u);
  EXPECT_EQ(value_of(fc, Simplex{0, 1}), 3.0);
  EXPECT_EQ(value_of(fc, Simplex{1, 2}), 2.0);
}

TEST(LowerStar, ConstantFunction) {
  const std::vector<Simplex> tri{Simplex{0, 1, 2}};
  const std::vector<double> values{1.5, 1.5, 1.5};
  const auto fc = lower_star_filtration(tri, values);
  EXPECT_EQ(fc.size(), 7u);
  for (const auto& fs : fc) EXPECT_EQ(fs.value, 1.5);
}

TEST(LowerStar, MissingValueRejected) {
  const std::vector<Simplex> edge{Simplex{0, 1}};
  const std::map<Vertex, double> partial{{0, 1.0}};
  EXPECT_THROW(lower_star_filtration(edge, partial), InputError);
}

TEST(Nerve, Examples) {
  EXPECT_EQ(nerve({{1}, {2}}, 2), (std::vector<Simplex>{Simplex{0}, Simplex{1}}));
  const auto ring = nerve({{1, 2}, {2, 3}, {3, 1}}, 2);
  EXPECT_EQ(ring.size(), 6u);
  EXPECT_EQ(std::count(ring.begin(), ring.end(), Simplex{0, 1, 2}), 0);
  const auto full = nerve({{1}, {1}, {1}}, 2);
  EXPECT_EQ(full.size(), 7u);
  EXPECT_EQ(nerve({{1}, {1}, {1}}, 1).size(), 6u);
}

TEST(Nerve, RejectsEmptySet) { EXPECT_THROW(nerve({{1}, {}}, 1), InputError); }

TEST(Nerve, ClosedUnderFaces) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<std::size_t>> sets(5);
    for (auto& s : sets)
      for (std::size_t e = 0; e < 6; ++e)
        if (rng.uniform01() < 0.4) s.push_back(e);
    for (auto& s : sets)
      if (s.empty()) s.push_back(rng.uniform_index(6));
    const auto nv = nerve(sets, 4);
    const std::set<Simplex> all(nv.begin(), nv.end());
    for (const auto& s : nv)
      if (s.dim() > 0)
        for (const auto& f : s.facets()) EXPECT_TRUE(all.count(f));
  }
}

TEST(Cover1D, Examples) {
  const auto c = build_cover_1d(0, 1, 0.5, 0.25);
  ASSERT_EQ(c.intervals.size(), 3u);
  EXPECT_DOUBLE_EQ(c.intervals[0].lo, 0.0);
  EXPECT_DOUBLE_EQ(c.intervals[1].lo, 0.375);
  EXPECT_DOUBLE_EQ(c.intervals[2].lo, 0.75);
  const auto one = build_cover_1d(0, 1, 1, 0.25);
  ASSERT_EQ(one.intervals.size(), 1u);
  EXPECT_EQ(one.intervals[0].lo, 0.0);
  EXPECT_EQ(one.intervals[0].hi, 1.0);
}

TEST(Cover1D, GainBelowHalfHasMultiplicityTwo) {
  for (double res : {0.1, 0.25, 0.33}) {
    const auto c = build_cover_1d(0, 1, res, 0.25);
    std::size_t worst = 0;
    for (int i = 0; i <= 10000; ++i) worst = std::max(worst, c.containing(i / 10000.0).size());
    EXPECT_EQ(worst, 2u);
  }
}

TEST(Cover1D, ByCountSpansRange) {
  const auto c = build_cover_1d_by_count(-1, 1, 4, 0.3);
  ASSERT_EQ(c.intervals.size(), 4u);
  EXPECT_DOUBLE_EQ(c.intervals.front().lo, -1.0);
  EXPECT_NEAR(c.intervals.back().hi, 1.0, 1e-12);
  EXPECT_THROW(build_cover_1d(0, 1, 0.5, 1.0), InputError);
  EXPECT_THROW(build_cover_1d(0, 1, 0.0, 0.3), InputError);
}

}  // namespace
}  // namespace tda
