#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "tda/metric.hpp"
#include "tda/random.hpp"

namespace tda::testing {

inline PointCloud uniform_circle(std::size_t n, std::uint64_t seed, double noise = 0.0, double radius = 1.0) {
  Rng rng(seed);
  std::vector<double> c;
  c.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * rng.uniform01();
    c.push_back(radius * std::cos(t) + noise * rng.normal());
    c.push_back(radius * std::sin(t) + noise * rng.normal());
  }
  return PointCloud(2, std::move(c));
}

inline PointCloud even_circle(std::size_t n, double radius = 1.0) {
  std::vector<double> c;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    c.push_back(radius * std::cos(t));
    c.push_back(radius * std::sin(t));
  }
  return PointCloud(2, std::move(c));
}

/// Stratified torus sample: one jittered point per cell of a major x minor
/// angular grid.
inline PointCloud jittered_torus(std::size_t major, std::size_t minor, double big_r, double small_r,
                                 std::uint64_t seed) {
  Rng rng(seed);
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> c;
  for (std::size_t i = 0; i < major; ++i)
    for (std::size_t j = 0; j < minor; ++j) {
      const double u = two_pi * (static_cast<double>(i) + 0.5 * rng.uniform01()) / static_cast<double>(major);
      const double v = two_pi * (static_cast<double>(j) + 0.5 * rng.uniform01()) / static_cast<double>(minor);
      c.push_back((big_r + small_r * std::cos(v)) * std::cos(u));
      c.push_back((big_r + small_r * std::cos(v)) * std::sin(u));
      c.push_back(small_r * std::sin(v));
    }
  return PointCloud(3, std::move(c));
}

inline PointCloud random_cloud(std::size_t n, std::size_t dim, Rng& rng, double scale = 1.0) {
  std::vector<double> c(n * dim);
  for (auto& v : c) v = scale * rng.uniform01();
  return PointCloud(dim, std::move(c));
}

}  // namespace tda::testing
