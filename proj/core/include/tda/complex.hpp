#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tda/metric.hpp"

namespace tda {

using Vertex = std::uint32_t;

/// A simplex as its strictly increasing vertex list.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input; repeated vertices are rejected.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Codimension-one faces, each omitting one vertex, in order of the omitted vertex.
  std::vector<Simplex> facets() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

struct FilteredSimplex {
  Simplex simplex;
  double value = 0.0;

  friend bool operator==(const FilteredSimplex&, const FilteredSimplex&) = default;
};

/// Filtration order: value, then dimension, then lexicographic vertex list.
bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b);

/// Simplices with filtration values, kept sorted in filtration order.
/// Construction checks closure under faces and monotonicity and throws
/// InputError when either fails.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  explicit FilteredComplex(std::vector<FilteredSimplex> simplices);

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  const FilteredSimplex& operator[](std::size_t i) const { return simplices_[i]; }
  auto begin() const { return simplices_.begin(); }
  auto end() const { return simplices_.end(); }
  const std::vector<FilteredSimplex>& simplices() const { return simplices_; }

  /// One more than the largest vertex id (0 for an empty complex).
  std::size_t vertex_count() const { return vertex_count_; }
  int max_dim() const { return max_dim_; }
  std::size_t count_in_dim(int dim) const;

  /// Simplices with value <= threshold, as a set of vertex lists.
  std::vector<Simplex> sublevel(double threshold) const;

  /// Free-form tag describing where the filtration came from.
  const std::string& source() const { return source_; }
  void set_source(std::string s) { source_ = std::move(s); }

 private:
  std::vector<FilteredSimplex> simplices_;
  std::size_t vertex_count_ = 0;
  int max_dim_ = -1;
  std::string source_;
};

/// Lists every violated invariant (closure, monotonicity, order). Empty when valid.
std::vector<std::string> check_filtration(std::span<const FilteredSimplex> simplices);

/// Vietoris-Rips filtration: a simplex enters at its largest pairwise
/// distance; only simplices with value <= max_edge and dimension <= max_dim.
/// max_dim > n-1 is clamped and a message is appended to `warnings`.
FilteredComplex rips_filtration(const MetricSpace& data, double max_edge, int max_dim,
                                std::vector<std::string>* warnings = nullptr);

/// Cech filtration: a simplex enters at the radius of the minimal enclosing
/// ball of its vertices.
FilteredComplex cech_filtration(const PointCloud& data, double max_radius, int max_dim,
                                std::vector<std::string>* warnings = nullptr);

/// Sublevel filtration of a vertex function, extended to simplices by max.
/// The input is closed under faces automatically. Missing vertex values are rejected.
FilteredComplex lower_star_filtration(std::span<const Simplex> simplices,
                                      const std::map<Vertex, double>& vertex_values);
FilteredComplex lower_star_filtration(std::span<const Simplex> simplices,
                                      std::span<const double> vertex_values);

/// Path graph 0-1-...-(n-1) with the given vertex values: the discretisation
/// of a function on an interval.
FilteredComplex path_filtration(std::span<const double> values);

/// Every face of every input simplex, deduplicated and sorted.
std::vector<Simplex> face_closure(std::span<const Simplex> simplices);

/// Nerve of a finite cover: [i0..ik] is present iff the member sets share an
/// element. Dimension capped at max_dim.
std::vector<Simplex> nerve(const std::vector<std::vector<std::size_t>>& cover_sets, int max_dim);

struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Regularly spaced closed intervals of length `resolution` whose consecutive
/// overlap is `gain * resolution`.
struct Cover1D {
  std::vector<Interval> intervals;
  double resolution = 0.0;
  double gain = 0.0;

  /// Indices of the intervals containing x.
  std::vector<std::size_t> containing(double x) const;
};

/// Starts at lo, step resolution*(1-gain), stops once an interval reaches hi.
Cover1D build_cover_1d(double lo, double hi, double resolution, double gain);
/// Resolution chosen so that exactly `count` intervals span [lo, hi].
Cover1D build_cover_1d_by_count(double lo, double hi, std::size_t count, double gain);

/// Minimal enclosing ball radius of a point set in R^d (move-to-front Welzl,
/// deterministic shuffle).
double minimal_enclosing_radius(const PointCloud& points, std::span<const std::size_t> subset);

}  // namespace tda
