// Minimal enclosing balls by Welzl's move-to-front recursion.

#include <algorithm>
#include <cmath>
#include <list>
#include <vector>

#include "tda/complex.hpp"
#include "tda/error.hpp"
#include "tda/random.hpp"

namespace tda {

namespace {

struct Ball {
  std::vector<double> center;
  double radius2 = -1.0;  // negative: empty ball
};

bool inside(const Ball& ball, std::span<const double> p) {
  if (ball.radius2 < 0.0) return false;
  double d2 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double t = p[i] - ball.center[i];
    d2 += t * t;
  }
  return d2 <= ball.radius2 * (1.0 + 1e-12) + 1e-300;
}

// Smallest ball with every point of `boundary` on its sphere.
Ball circumscribed(const PointCloud& pts, const std::vector<std::size_t>& boundary) {
  const std::size_t d = pts.dim();
  Ball ball;
  if (boundary.empty()) return ball;
  auto p0 = pts[boundary[0]];
  ball.center.assign(p0.begin(), p0.end());
  ball.radius2 = 0.0;
  const std::size_t k = boundary.size() - 1;
  if (k == 0) return ball;

  std::vector<std::vector<double>> v(k, std::vector<double>(d));
  for (std::size_t i = 0; i < k; ++i) {
    auto pi = pts[boundary[i + 1]];
    for (std::size_t c = 0; c < d; ++c) v[i][c] = pi[c] - p0[c];
  }
  // 2 (v_i . v_j) lambda_j = |v_i|^2, solved with partial pivoting.
  std::vector<std::vector<double>> a(k, std::vector<double>(k + 1));
  double scale = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double dot = 0.0;
      for (std::size_t c = 0; c < d; ++c) dot += v[i][c] * v[j][c];
      a[i][j] = 2.0 * dot;
    }
    a[i][k] = 0.5 * a[i][i];
    scale = std::max(scale, std::abs(a[i][i]));
  }
  bool singular = false;
  for (std::size_t col = 0; col < k && !singular; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) <= 1e-12 * scale) {
      singular = true;
      break;
    }
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  if (singular) {
    // Affinely dependent boundary (duplicates, collinear triples): fall back
    // to the diametral ball of the farthest pair, grown to cover the rest.
    std::size_t bi = 0, bj = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < boundary.size(); ++i)
      for (std::size_t j = i + 1; j < boundary.size(); ++j) {
        const double dd = euclidean(pts[boundary[i]], pts[boundary[j]]);
        if (dd > best) best = dd, bi = i, bj = j;
      }
    auto pa = pts[boundary[bi]];
    auto pb = pts[boundary[bj]];
    for (std::size_t c = 0; c < d; ++c) ball.center[c] = 0.5 * (pa[c] + pb[c]);
    double r = 0.0;
    for (std::size_t idx : boundary) r = std::max(r, euclidean(ball.center, pts[idx]));
    ball.radius2 = r * r;
    return ball;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const double lambda = a[i][k] / a[i][i];
    for (std::size_t c = 0; c < d; ++c) ball.center[c] += lambda * v[i][c];
  }
  double r2 = 0.0;
  for (std::size_t idx : boundary) {
    const double r = euclidean(ball.center, pts[idx]);
    r2 = std::max(r2, r * r);
  }
  ball.radius2 = r2;
  return ball;
}

Ball move_to_front(const PointCloud& pts, std::list<std::size_t>& order,
                   std::list<std::size_t>::iterator end, std::vector<std::size_t>& boundary) {
  Ball ball = circumscribed(pts, boundary);
  if (boundary.size() == pts.dim() + 1) return ball;
  for (auto it = order.begin(); it != end;) {
    auto current = it++;
    if (inside(ball, pts[*current])) continue;
    boundary.push_back(*current);
    ball = move_to_front(pts, order, current, boundary);
    boundary.pop_back();
    order.splice(order.begin(), order, current);
  }
  return ball;
}

}  // namespace

double minimal_enclosing_radius(const PointCloud& points, std::span<const std::size_t> subset) {
  if (subset.empty()) throw InputError("minimal enclosing ball: empty point set");
  if (subset.size() == 1) return 0.0;
  if (subset.size() == 2) return 0.5 * euclidean(points[subset[0]], points[subset[1]]);

  std::vector<std::size_t> shuffled(subset.begin(), subset.end());
  Rng rng(0x5eedba11ULL + shuffled.size());
  for (std::size_t i = shuffled.size() - 1; i > 0; --i)
    std::swap(shuffled[i], shuffled[rng.uniform_index(i + 1)]);

  std::list<std::size_t> order(shuffled.begin(), shuffled.end());
  std::vector<std::size_t> boundary;
  const Ball ball = move_to_front(points, order, order.end(), boundary);
  return std::sqrt(std::max(0.0, ball.radius2));
}

}  // namespace tda
