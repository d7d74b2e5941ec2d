#include "tda/diagmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "tda/error.hpp"
#include "tda/parallel.hpp"

namespace tda {

namespace {

double linf(const DiagramPoint& a, const DiagramPoint& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double to_diagonal(const DiagramPoint& a) { return 0.5 * (a.death - a.birth); }

struct Split {
  std::vector<DiagramPoint> finite;
  std::vector<double> essential_births;
};

Split split(std::span<const DiagramPoint> pts) {
  Split s;
  for (const auto& p : pts) {
    if (p.essential())
      s.essential_births.push_back(p.birth);
    else
      s.finite.push_back(p);
  }
  std::sort(s.essential_births.begin(), s.essential_births.end());
  return s;
}

// Maximum bipartite matching by Hopcroft-Karp (layered BFS, then DFS along layers).
class HopcroftKarp {
 public:
  explicit HopcroftKarp(std::size_t n) : n_(n), adj_(n), match_left_(n), match_right_(n), layer_(n) {}

  void add_edge(std::size_t left, std::size_t right) { adj_[left].push_back(right); }

  std::size_t max_matching() {
    std::fill(match_left_.begin(), match_left_.end(), kNone);
    std::fill(match_right_.begin(), match_right_.end(), kNone);
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < n_; ++u)
        if (match_left_[u] == kNone && dfs(u)) ++matched;
    }
    return matched;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> q;
    bool reachable_free = false;
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_left_[u] == kNone) {
        layer_[u] = 0;
        q.push(u);
      } else {
        layer_[u] = kNone;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kNone) {
          reachable_free = true;
        } else if (layer_[w] == kNone) {
          layer_[w] = layer_[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = match_right_[v];
      if (w == kNone || (layer_[w] == layer_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    layer_[u] = kNone;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_, match_right_, layer_;
};

// Left side: points of a, then diagonal copies of b. Right side: points of b,
// then diagonal copies of a.
bool matchable_within(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b,
                      double delta) {
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  HopcroftKarp hk(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j)
      if (linf(a[i], b[j]) <= delta) hk.add_edge(i, j);
    if (to_diagonal(a[i]) <= delta) hk.add_edge(i, nb + i);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (to_diagonal(b[j]) <= delta) hk.add_edge(na + j, j);
    for (std::size_t i = 0; i < na; ++i) hk.add_edge(na + j, nb + i);
  }
  return hk.max_matching() == n;
}

double finite_bottleneck(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b) {
  std::vector<double> candidates{0.0};
  candidates.reserve(a.size() * b.size() + a.size() + b.size() + 1);
  for (const auto& p : a) candidates.push_back(to_diagonal(p));
  for (const auto& q : b) candidates.push_back(to_diagonal(q));
  for (const auto& p : a)
    for (const auto& q : b) candidates.push_back(linf(p, q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The largest candidate is always feasible (everything to the diagonal fits).
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matchable_within(a, b, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace

double bottleneck(std::span<const DiagramPoint> a, std::span<const DiagramPoint> b) {
  const Split sa = split(a), sb = split(b);
  if (sa.essential_births.size() != sb.essential_births.size()) return kInfinity;
  double essential = 0.0;
  for (std::size_t i = 0; i < sa.essential_births.size(); ++i)
    essential = std::max(essential, std::abs(sa.essential_births[i] - sb.essential_births[i]));
  return std::max(essential, finite_bottleneck(sa.finite, sb.finite));
}

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
  const auto pa = a.in_dim(dim), pb = b.in_dim(dim);
  return bottleneck(std::span<const DiagramPoint>(pa), std::span<const DiagramPoint>(pb));
}

double bottleneck_all_dims(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  double worst = 0.0;
  for (int d = 0; d <= std::max(a.max_dim(), b.max_dim()); ++d) worst = std::max(worst, bottleneck(a, b, d));
  return worst;
}

std::vector<std::size_t> solve_assignment(std::span<const double> cost, std::size_t n) {
  if (cost.size() != n * n) throw InputError("assignment: cost matrix is not n x n");
  constexpr double inf = std::numeric_limits<double>::infinity();
  // Shortest augmenting paths with dual potentials; index 0 is a sentinel column.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> owner(n + 1, 0), way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    owner[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[col0] = 1;
      const std::size_t r = owner[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const double w = cost[(r - 1) * n + (c - 1)];
        if (w != inf) {
          const double reduced = w - u[r] - v[c];
          if (reduced < minv[c]) {
            minv[c] = reduced;
            way[c] = col0;
          }
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = c;
        }
      }
      if (delta == inf) throw InputError("assignment: no perfect matching with finite cost");
      for (std::size_t c = 0; c <= n; ++c) {
        if (used[c]) {
          u[owner[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (owner[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      owner[col0] = owner[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t c = 1; c <= n; ++c) assignment[owner[c] - 1] = c - 1;
  return assignment;
}

double wasserstein(std::span<const DiagramPoint> a, std::span<const DiagramPoint> b, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("wasserstein: p must be finite and >= 1");
  const Split sa = split(a), sb = split(b);
  if (sa.essential_births.size() != sb.essential_births.size()) return kInfinity;
  double total = 0.0;
  for (std::size_t i = 0; i < sa.essential_births.size(); ++i)
    total += std::pow(std::abs(sa.essential_births[i] - sb.essential_births[i]), p);

  const auto& fa = sa.finite;
  const auto& fb = sb.finite;
  const std::size_t na = fa.size(), nb = fb.size(), n = na + nb;
  if (n > 0) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    // Rows: a then diagonal copies of b. Columns: b then diagonal copies of a.
    std::vector<double> cost(n * n, inf);
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) cost[i * n + j] = std::pow(linf(fa[i], fb[j]), p);
      cost[i * n + nb + i] = std::pow(to_diagonal(fa[i]), p);
    }
    for (std::size_t j = 0; j < nb; ++j) {
      cost[(na + j) * n + j] = std::pow(to_diagonal(fb[j]), p);
      for (std::size_t i = 0; i < na; ++i) cost[(na + j) * n + nb + i] = 0.0;
    }
    const auto assignment = solve_assignment(cost, n);
    for (std::size_t r = 0; r < n; ++r) total += cost[r * n + assignment[r]];
  }
  return std::pow(total, 1.0 / p);
}

double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim, double p) {
  const auto pa = a.in_dim(dim), pb = b.in_dim(dim);
  return wasserstein(std::span<const DiagramPoint>(pa), std::span<const DiagramPoint>(pb), p);
}

std::vector<double> distance_matrix(std::span<const PersistenceDiagram> diagrams, DiagramMetric metric,
                                    int dim, double p) {
  const std::size_t n = diagrams.size();
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) jobs.emplace_back(i, j);
  std::vector<double> m(n * n, 0.0);
  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto [i, j] = jobs[k];
    const double d = metric == DiagramMetric::bottleneck ? bottleneck(diagrams[i], diagrams[j], dim)
                                                         : wasserstein(diagrams[i], diagrams[j], dim, p);
    m[i * n + j] = d;
    m[j * n + i] = d;
  });
  return m;
}

}  // namespace tda
