#include "tda/complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tda/error.hpp"

namespace tda {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InputError("simplex: repeated vertex");
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() <= 1) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    Simplex f;
    f.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != skip) f.vertices_.push_back(vertices_[i]);
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
  return a.simplex < b.simplex;
}

std::vector<std::string> check_filtration(std::span<const FilteredSimplex> simplices) {
  std::vector<std::string> problems;
  std::unordered_map<Simplex, std::size_t, SimplexHash> position;
  position.reserve(simplices.size());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& s = simplices[i];
    if (s.simplex.size() == 0) problems.push_back("empty simplex at position " + std::to_string(i));
    if (std::isnan(s.value)) problems.push_back("NaN filtration value at position " + std::to_string(i));
    if (!position.emplace(s.simplex, i).second)
      problems.push_back("duplicate simplex at position " + std::to_string(i));
    if (i > 0 && filtration_less(s, simplices[i - 1]))
      problems.push_back("out of filtration order at position " + std::to_string(i));
  }
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& s = simplices[i];
    for (const auto& f : s.simplex.facets()) {
      auto it = position.find(f);
      if (it == position.end()) {
        problems.push_back("missing face of simplex at position " + std::to_string(i));
      } else if (simplices[it->second].value > s.value) {
        problems.push_back("face enters after coface at position " + std::to_string(i));
      }
    }
  }
  return problems;
}

FilteredComplex::FilteredComplex(std::vector<FilteredSimplex> simplices)
    : simplices_(std::move(simplices)) {
  std::sort(simplices_.begin(), simplices_.end(), filtration_less);
  if (auto problems = check_filtration(simplices_); !problems.empty())
    throw InputError("invalid filtration: " + problems.front());
  for (const auto& s : simplices_) {
    max_dim_ = std::max(max_dim_, s.simplex.dim());
    vertex_count_ = std::max<std::size_t>(vertex_count_, s.simplex.vertices().back() + 1);
  }
}

std::size_t FilteredComplex::count_in_dim(int dim) const {
  return static_cast<std::size_t>(std::count_if(
      simplices_.begin(), simplices_.end(), [dim](const auto& s) { return s.simplex.dim() == dim; }));
}

std::vector<Simplex> FilteredComplex::sublevel(double threshold) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (s.value > threshold) break;
    out.push_back(s.simplex);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int clamp_dimension(int max_dim, std::size_t n, std::vector<std::string>* warnings) {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  const int limit = static_cast<int>(n) - 1;
  if (max_dim > limit) {
    if (warnings)
      warnings->push_back("max_dim " + std::to_string(max_dim) + " clamped to " +
                          std::to_string(limit) + " (only " + std::to_string(n) + " vertices)");
    return limit;
  }
  return max_dim;
}

// Enumerates the cliques of the threshold graph {d(i,j) <= threshold} up to
// max_dim, in a deterministic order. `accept` returns the value of a candidate
// simplex or NaN to reject it (and all its cofaces reached through it).
void expand_cliques(const DissimilarityMatrix& dist, double threshold, int max_dim,
                    const std::function<double(const std::vector<Vertex>&, double)>& accept,
                    std::vector<FilteredSimplex>& out) {
  const std::size_t n = dist.size();
  std::vector<std::vector<Vertex>> upper(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(i, j) <= threshold) upper[i].push_back(static_cast<Vertex>(j));

  std::vector<Vertex> current;
  std::function<void(const std::vector<Vertex>&, double)> grow =
      [&](const std::vector<Vertex>& candidates, double value) {
        out.push_back({Simplex(current), value});
        if (static_cast<int>(current.size()) > max_dim) return;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
          const Vertex v = candidates[c];
          current.push_back(v);
          const double next = accept(current, value);
          if (!std::isnan(next)) {
            std::vector<Vertex> narrowed;
            const auto& nv = upper[v];
            std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(c) + 1,
                                  candidates.end(), nv.begin(), nv.end(),
                                  std::back_inserter(narrowed));
            grow(narrowed, next);
          }
          current.pop_back();
        }
      };
  for (std::size_t i = 0; i < n; ++i) {
    current = {static_cast<Vertex>(i)};
    grow(upper[i], 0.0);
  }
}

}  // namespace

FilteredComplex rips_filtration(const MetricSpace& data, double max_edge, int max_dim,
                                std::vector<std::string>* warnings) {
  if (!(max_edge >= 0.0)) throw InputError("rips: max_edge must be non-negative");
  max_dim = clamp_dimension(max_dim, data.size(), warnings);
  const DissimilarityMatrix dist = data.distances();
  std::vector<FilteredSimplex> simplices;
  expand_cliques(
      dist, max_edge, max_dim,
      [&](const std::vector<Vertex>& s, double parent) {
        const Vertex added = s.back();
        double v = parent;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) v = std::max(v, dist(s[i], added));
        return v;
      },
      simplices);
  FilteredComplex fc(std::move(simplices));
  fc.set_source("rips");
  return fc;
}

FilteredComplex cech_filtration(const PointCloud& data, double max_radius, int max_dim,
                                std::vector<std::string>* warnings) {
  if (!(max_radius >= 0.0)) throw InputError("cech: max_radius must be non-negative");
  max_dim = clamp_dimension(max_dim, data.size(), warnings);
  const DissimilarityMatrix dist = DissimilarityMatrix::from_points(data);
  std::vector<FilteredSimplex> simplices;
  std::vector<std::size_t> idx;
  // Cech_a is contained in Rips_2a, so cliques of the 2a-graph are the candidates.
  expand_cliques(
      dist, 2.0 * max_radius, max_dim,
      [&](const std::vector<Vertex>& s, double parent) {
        idx.assign(s.begin(), s.end());
        const double r = std::max(parent, minimal_enclosing_radius(data, idx));
        return r <= max_radius ? r : std::numeric_limits<double>::quiet_NaN();
      },
      simplices);

  // Rounding in the ball solver can leave a face marginally above a coface.
  std::sort(simplices.begin(), simplices.end(),
            [](const auto& a, const auto& b) { return a.simplex.dim() < b.simplex.dim(); });
  std::unordered_map<Simplex, double, SimplexHash> value;
  value.reserve(simplices.size());
  for (auto& s : simplices) {
    for (const auto& f : s.simplex.facets()) s.value = std::max(s.value, value.at(f));
    value.emplace(s.simplex, s.value);
  }
  FilteredComplex fc(std::move(simplices));
  fc.set_source("cech");
  return fc;
}

std::vector<Simplex> face_closure(std::span<const Simplex> simplices) {
  std::set<Simplex> all;
  std::vector<Simplex> stack(simplices.begin(), simplices.end());
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    if (s.size() == 0) throw InputError("face closure: empty simplex");
    if (!all.insert(s).second) continue;
    for (auto& f : s.facets()) stack.push_back(std::move(f));
  }
  return {all.begin(), all.end()};
}

FilteredComplex lower_star_filtration(std::span<const Simplex> simplices,
                                      const std::map<Vertex, double>& vertex_values) {
  std::vector<FilteredSimplex> out;
  for (auto& s : face_closure(simplices)) {
    double v = -std::numeric_limits<double>::infinity();
    for (Vertex x : s.vertices()) {
      auto it = vertex_values.find(x);
      if (it == vertex_values.end())
        throw InputError("lower star: vertex " + std::to_string(x) + " has no value");
      if (!std::isfinite(it->second))
        throw InputError("lower star: vertex " + std::to_string(x) + " has a non-finite value");
      v = std::max(v, it->second);
    }
    out.push_back({std::move(s), v});
  }
  FilteredComplex fc(std::move(out));
  fc.set_source("lower-star");
  return fc;
}

FilteredComplex lower_star_filtration(std::span<const Simplex> simplices,
                                      std::span<const double> vertex_values) {
  std::map<Vertex, double> values;
  for (std::size_t i = 0; i < vertex_values.size(); ++i) values[static_cast<Vertex>(i)] = vertex_values[i];
  return lower_star_filtration(simplices, values);
}

FilteredComplex path_filtration(std::span<const double> values) {
  if (values.empty()) throw InputError("path filtration: no values");
  std::vector<Simplex> path;
  for (std::size_t i = 0; i < values.size(); ++i) path.push_back(Simplex{static_cast<Vertex>(i)});
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    path.push_back(Simplex{static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return lower_star_filtration(path, values);
}

std::vector<Simplex> nerve(const std::vector<std::vector<std::size_t>>& cover_sets, int max_dim) {
  if (max_dim < 0) throw InputError("nerve: max_dim must be non-negative");
  std::map<std::size_t, std::vector<Vertex>> owners;
  for (std::size_t i = 0; i < cover_sets.size(); ++i) {
    if (cover_sets[i].empty()) throw InputError("nerve: cover set " + std::to_string(i) + " is empty");
    for (std::size_t e : std::set<std::size_t>(cover_sets[i].begin(), cover_sets[i].end()))
      owners[e].push_back(static_cast<Vertex>(i));
  }
  std::set<Simplex> out;
  for (std::size_t i = 0; i < cover_sets.size(); ++i) out.insert(Simplex{static_cast<Vertex>(i)});
  std::vector<Vertex> current;
  std::function<void(const std::vector<Vertex>&, std::size_t)> pick =
      [&](const std::vector<Vertex>& sets, std::size_t from) {
        if (!current.empty()) out.insert(Simplex(current));
        if (static_cast<int>(current.size()) > max_dim) return;
        for (std::size_t i = from; i < sets.size(); ++i) {
          current.push_back(sets[i]);
          pick(sets, i + 1);
          current.pop_back();
        }
      };
  for (const auto& [element, sets] : owners) pick(sets, 0);
  return {out.begin(), out.end()};
}

std::vector<std::size_t> Cover1D::containing(double x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    if (intervals[i].contains(x)) out.push_back(i);
  return out;
}

Cover1D build_cover_1d(double lo, double hi, double resolution, double gain) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
    throw InputError("cover: range must satisfy lo <= hi");
  if (!(resolution > 0.0) || !std::isfinite(resolution))
    throw InputError("cover: resolution must be positive");
  if (!(gain > 0.0 && gain < 1.0)) throw InputError("cover: gain must lie in (0, 1)");
  const double step = resolution * (1.0 - gain);
  std::size_t count = 1;
  if (hi - lo > resolution) {
    const double extra = (hi - lo - resolution) / step;
    count += static_cast<std::size_t>(std::ceil(extra - 1e-9));
  }
  Cover1D cover{{}, resolution, gain};
  cover.intervals.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double start = lo + static_cast<double>(i) * step;
    cover.intervals.push_back({start, start + resolution});
  }
  // Absorb rounding so the last interval always reaches hi.
  cover.intervals.back().hi = std::max(cover.intervals.back().hi, hi);
  return cover;
}

Cover1D build_cover_1d_by_count(double lo, double hi, std::size_t count, double gain) {
  if (count == 0) throw InputError("cover: interval count must be positive");
  if (!(gain > 0.0 && gain < 1.0)) throw InputError("cover: gain must lie in (0, 1)");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
    throw InputError("cover: range must satisfy lo <= hi");
  const double span = hi > lo ? hi - lo : 1.0;
  const double resolution = span / (1.0 + static_cast<double>(count - 1) * (1.0 - gain));
  const double step = resolution * (1.0 - gain);
  Cover1D cover{{}, resolution, gain};
  for (std::size_t i = 0; i < count; ++i) {
    const double start = lo + static_cast<double>(i) * step;
    cover.intervals.push_back({start, start + resolution});
  }
  cover.intervals.back().hi = std::max(cover.intervals.back().hi, hi);
  return cover;
}

}  // namespace tda
