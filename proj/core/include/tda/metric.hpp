#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tda {

/// Euclidean distance between two coordinate vectors of equal length.
double euclidean(std::span<const double> a, std::span<const double> b);

/// n points in R^d stored row-major. Invariants: n >= 1, d >= 1, every
/// coordinate finite. Labels are optional (empty, or one per point).
class PointCloud {
 public:
  PointCloud(std::size_t dim, std::vector<double> coords, std::vector<std::string> labels = {});

  static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const { return coords_; }
  const std::vector<std::string>& labels() const { return labels_; }

  PointCloud subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<std::string> labels_;
};

/// Symmetric, zero-diagonal, finite, non-negative n x n matrix. The triangle
/// inequality is not required (1 - |correlation| dissimilarities break it).
class DissimilarityMatrix {
 public:
  /// `values` is row-major n*n. Asymmetry or a non-zero diagonal beyond a
  /// relative 1e-9 is rejected; smaller discrepancies are symmetrised away.
  DissimilarityMatrix(std::size_t n, std::vector<double> values);

  static DissimilarityMatrix from_points(const PointCloud& points);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  const std::vector<double>& values() const { return values_; }

  /// Resample rows and columns jointly.
  DissimilarityMatrix subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// Either kind of input accepted by the filtration, Mapper and statistics
/// code. Point clouds use the Euclidean metric.
class MetricSpace {
 public:
  MetricSpace(PointCloud points) : data_(std::move(points)) {}
  MetricSpace(DissimilarityMatrix matrix) : data_(std::move(matrix)) {}

  std::size_t size() const;
  double distance(std::size_t i, std::size_t j) const;

  bool is_point_cloud() const { return std::holds_alternative<PointCloud>(data_); }
  const PointCloud* points() const { return std::get_if<PointCloud>(&data_); }
  const DissimilarityMatrix* matrix() const { return std::get_if<DissimilarityMatrix>(&data_); }

  /// All pairwise distances as a matrix (copied if already a matrix).
  DissimilarityMatrix distances() const;
  MetricSpace subset(std::span<const std::size_t> indices) const;

 private:
  std::variant<PointCloud, DissimilarityMatrix> data_;
};

/// Hausdorff distance between two finite point sets under the Euclidean metric.
/// Throws InputError on empty input or dimension mismatch.
double hausdorff(const PointCloud& a, const PointCloud& b);

/// Empirical distance-to-measure with mass m and power r. The neighbour count
/// is k = ceil(m n), so the mass m is always covered.
class DtmField {
 public:
  DtmField(PointCloud sample, double mass, double power = 2.0);

  const PointCloud& sample() const { return sample_; }
  double mass() const { return mass_; }
  double power() const { return power_; }
  std::size_t k() const { return k_; }

  /// ((1/k) sum_{j<=k} |x - X|_(j)^r)^(1/r) over the k nearest sample points.
  double value(std::span<const double> query) const;
  std::vector<double> values(const PointCloud& queries) const;

 private:
  PointCloud sample_;
  double mass_;
  double power_;
  std::size_t k_;
};

/// Neighbour count used by DtmField for mass m over n sample points.
std::size_t dtm_neighbor_count(double mass, std::size_t n);

using PointPair = std::pair<std::vector<double>, std::vector<double>>;

/// max over pairs of |dtm(x) - dtm(y)| - |x - y|. Non-positive (up to
/// rounding) because the DTM is 1-Lipschitz.
double dtm_lipschitz_check(const DtmField& field, std::span<const PointPair> pairs);

}  // namespace tda
