#include "tda/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <tuple>
#include <unordered_map>

#include "tda/error.hpp"

namespace tda {

PersistenceDiagram::PersistenceDiagram(std::vector<DiagramPoint> points, std::string source)
    : points_(std::move(points)), source_(std::move(source)) {
  for (const auto& p : points_) {
    if (p.dim < 0) throw InputError("diagram: negative homology dimension");
    if (!std::isfinite(p.birth)) throw InputError("diagram: non-finite birth");
    if (std::isnan(p.death) || p.death < p.birth) throw InputError("diagram: death before birth");
  }
  std::sort(points_.begin(), points_.end());
}

std::vector<DiagramPoint> PersistenceDiagram::in_dim(int dim) const {
  std::vector<DiagramPoint> out;
  std::copy_if(points_.begin(), points_.end(), std::back_inserter(out),
               [dim](const auto& p) { return p.dim == dim; });
  return out;
}

int PersistenceDiagram::max_dim() const { return points_.empty() ? -1 : points_.back().dim; }

PersistenceDiagram PersistenceDiagram::truncated(double value) const {
  std::vector<DiagramPoint> pts = points_;
  for (auto& p : pts)
    if (p.essential()) p.death = std::max(value, p.birth);
  return PersistenceDiagram(std::move(pts), source_);
}

namespace {

using Column = std::vector<std::size_t>;

void add_column(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

}  // namespace

std::vector<PersistencePair> persistence_pairs(const FilteredComplex& fc, int max_hom_dim) {
  if (max_hom_dim < 0) throw InputError("persistence: max_hom_dim must be non-negative");
  const std::size_t n = fc.size();

  std::unordered_map<Simplex, std::size_t, SimplexHash> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(fc[i].simplex, i);

  std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(std::max(fc.max_dim(), 0)) + 1);
  for (std::size_t i = 0; i < n; ++i) by_dim[static_cast<std::size_t>(fc[i].simplex.dim())].push_back(i);

  std::vector<char> cleared(n, 0);   // column known to reduce to zero (a birth)
  std::vector<char> negative(n, 0);  // column reduced to non-zero (a death)
  std::vector<std::size_t> pivot_owner(n, n);
  std::vector<PersistencePair> pairs;
  Column scratch;

  // Highest dimension first so that pivots clear the columns one dimension down.
  const int top = std::min(fc.max_dim(), max_hom_dim + 1);
  for (int d = top; d >= 1; --d) {
    std::unordered_map<std::size_t, Column> reduced;
    for (std::size_t j : by_dim[static_cast<std::size_t>(d)]) {
      if (cleared[j]) continue;
      Column col;
      for (const auto& f : fc[j].simplex.facets()) {
        auto it = index.find(f);
        if (it == index.end() || it->second >= j)
          throw InvariantError("persistence: filtration is not closed under faces or out of order");
        col.push_back(it->second);
      }
      std::sort(col.begin(), col.end());
      while (!col.empty()) {
        const std::size_t owner = pivot_owner[col.back()];
        if (owner == n) break;
        add_column(col, reduced.at(owner), scratch);
      }
      if (col.empty()) continue;
      const std::size_t low = col.back();
      pivot_owner[low] = j;
      negative[j] = 1;
      cleared[low] = 1;
      pairs.push_back({d - 1, low, j, fc[low].value, fc[j].value});
      reduced.emplace(j, std::move(col));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const int d = fc[i].simplex.dim();
    if (d > max_hom_dim || negative[i] || cleared[i]) continue;
    pairs.push_back({d, i, std::nullopt, fc[i].value, kInfinity});
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.dim, a.birth_index) < std::tie(b.dim, b.birth_index);
  });
  return pairs;
}

PersistenceDiagram compute_persistence(const FilteredComplex& fc, int max_hom_dim) {
  std::vector<DiagramPoint> pts;
  for (const auto& p : persistence_pairs(fc, max_hom_dim)) {
    if (p.death_index && !(p.death > p.birth)) continue;
    pts.push_back({p.dim, p.birth, p.death});
  }
  return PersistenceDiagram(std::move(pts), fc.source());
}

std::vector<int> betti_numbers(const PersistenceDiagram& dgm, double at, int max_dim) {
  if (max_dim < 0) max_dim = dgm.max_dim();
  std::vector<int> betti(static_cast<std::size_t>(std::max(max_dim + 1, 0)), 0);
  for (const auto& p : dgm) {
    if (p.dim > max_dim) continue;
    if (p.birth <= at && at < p.death) ++betti[static_cast<std::size_t>(p.dim)];
  }
  return betti;
}

int persistent_betti_rank(const PersistenceDiagram& dgm, int k, double r, double s) {
  if (r > s) throw InputError("persistent_betti_rank: requires r <= s");
  int rank = 0;
  for (const auto& p : dgm)
    if (p.dim == k && p.birth <= r && p.death > s) ++rank;
  return rank;
}

}  // namespace tda
