#include "tda/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tda/error.hpp"

namespace tda {

double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords, std::vector<std::string> labels)
    : dim_(dim), coords_(std::move(coords)), labels_(std::move(labels)) {
  if (dim_ == 0) throw InputError("point cloud: dimension must be at least 1");
  if (coords_.empty()) throw InputError("point cloud: no points");
  if (coords_.size() % dim_ != 0)
    throw InputError("point cloud: coordinate count is not a multiple of the dimension");
  for (double c : coords_)
    if (!std::isfinite(c)) throw InputError("point cloud: non-finite coordinate");
  if (!labels_.empty() && labels_.size() != size())
    throw InputError("point cloud: label count does not match point count");
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw InputError("point cloud: no points");
  const std::size_t d = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw InputError("point cloud: rows have differing dimensions");
    coords.insert(coords.end(), r.begin(), r.end());
  }
  return PointCloud(d, std::move(coords));
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
  std::vector<double> coords;
  coords.reserve(indices.size() * dim_);
  std::vector<std::string> labels;
  for (std::size_t i : indices) {
    if (i >= size()) throw InputError("point cloud: subset index out of range");
    auto p = (*this)[i];
    coords.insert(coords.end(), p.begin(), p.end());
    if (!labels_.empty()) labels.push_back(labels_[i]);
  }
  return PointCloud(dim_, std::move(coords), std::move(labels));
}

DissimilarityMatrix::DissimilarityMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n_ == 0) throw InputError("dissimilarity matrix: empty");
  if (values_.size() != n_ * n_) throw InputError("dissimilarity matrix: not square");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = values_[i * n_ + j];
      if (!std::isfinite(v)) throw InputError("dissimilarity matrix: non-finite entry");
      if (v < 0.0) throw InputError("dissimilarity matrix: negative entry");
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    double& d = values_[i * n_ + i];
    if (std::abs(d) > 1e-9) throw InputError("dissimilarity matrix: non-zero diagonal");
    d = 0.0;
    for (std::size_t j = i + 1; j < n_; ++j) {
      double& a = values_[i * n_ + j];
      double& b = values_[j * n_ + i];
      if (std::abs(a - b) > 1e-9 * std::max(1.0, std::max(a, b)))
        throw InputError("dissimilarity matrix: not symmetric");
      if (a != b) a = b = 0.5 * (a + b);
    }
  }
}

DissimilarityMatrix DissimilarityMatrix::from_points(const PointCloud& points) {
  const std::size_t n = points.size();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v[i * n + j] = v[j * n + i] = euclidean(points[i], points[j]);
  return DissimilarityMatrix(n, std::move(v));
}

DissimilarityMatrix DissimilarityMatrix::subset(std::span<const std::size_t> indices) const {
  const std::size_t m = indices.size();
  std::vector<double> v(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    if (indices[a] >= n_) throw InputError("dissimilarity matrix: subset index out of range");
    for (std::size_t b = 0; b < m; ++b) v[a * m + b] = (*this)(indices[a], indices[b]);
  }
  return DissimilarityMatrix(m, std::move(v));
}

std::size_t MetricSpace::size() const {
  return std::visit([](const auto& d) { return d.size(); }, data_);
}

double MetricSpace::distance(std::size_t i, std::size_t j) const {
  if (const auto* p = points()) return euclidean((*p)[i], (*p)[j]);
  return (*matrix())(i, j);
}

DissimilarityMatrix MetricSpace::distances() const {
  if (const auto* p = points()) return DissimilarityMatrix::from_points(*p);
  return *matrix();
}

MetricSpace MetricSpace::subset(std::span<const std::size_t> indices) const {
  return std::visit([&](const auto& d) { return MetricSpace(d.subset(indices)); }, data_);
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
  if (a.dim() != b.dim()) throw InputError("hausdorff: dimension mismatch");
  auto directed = [](const PointCloud& from, const PointCloud& to) {
    double worst = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < to.size() && nearest > worst; ++j)
        nearest = std::min(nearest, euclidean(from[i], to[j]));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::size_t dtm_neighbor_count(double mass, std::size_t n) {
  if (!(mass > 0.0 && mass <= 1.0)) throw InputError("dtm: mass must lie in (0, 1]");
  // Slack so that m = k/n maps back to k despite rounding in m*n.
  const double k = std::ceil(mass * static_cast<double>(n) - 1e-9);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(k, 1.0)), 1, n);
}

DtmField::DtmField(PointCloud sample, double mass, double power)
    : sample_(std::move(sample)), mass_(mass), power_(power) {
  if (!(power_ >= 1.0) || !std::isfinite(power_)) throw InputError("dtm: power must be >= 1");
  k_ = dtm_neighbor_count(mass_, sample_.size());
}

double DtmField::value(std::span<const double> query) const {
  if (query.size() != sample_.dim()) throw InputError("dtm: query dimension mismatch");
  std::vector<double> d(sample_.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = euclidean(query, sample_[i]);
  std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k_ - 1), d.end());
  std::sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k_));
  double sum = 0.0;
  for (std::size_t j = 0; j < k_; ++j) sum += power_ == 2.0 ? d[j] * d[j] : std::pow(d[j], power_);
  const double mean = sum / static_cast<double>(k_);
  return power_ == 2.0 ? std::sqrt(mean) : std::pow(mean, 1.0 / power_);
}

std::vector<double> DtmField::values(const PointCloud& queries) const {
  std::vector<double> out(queries.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = value(queries[i]);
  return out;
}

double dtm_lipschitz_check(const DtmField& field, std::span<const PointPair> pairs) {
  if (pairs.empty()) throw InputError("dtm_lipschitz_check: no pairs");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pairs) {
    if (x.size() != y.size()) throw InputError("dtm_lipschitz_check: pair dimension mismatch");
    worst = std::max(worst, std::abs(field.value(x) - field.value(y)) - euclidean(x, y));
  }
  return worst;
}

}  // namespace tda
