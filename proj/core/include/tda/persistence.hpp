#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tda/complex.hpp"

namespace tda {

/// Death value of classes that never die.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct DiagramPoint {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;

  bool essential() const { return death == kInfinity; }
  double persistence() const { return death - birth; }

  friend auto operator<=>(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Multiset of (dim, birth, death) points above the diagonal, stored in
/// (dim, birth, death) order. The diagonal itself is implicit.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  /// Rejects death < birth and non-finite births.
  explicit PersistenceDiagram(std::vector<DiagramPoint> points, std::string source = {});

  const std::vector<DiagramPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Points of one homology dimension.
  std::vector<DiagramPoint> in_dim(int dim) const;
  /// -1 for an empty diagram.
  int max_dim() const;
  /// Copy with infinite deaths replaced by `value` (the "stopped filtration" view).
  PersistenceDiagram truncated(double value) const;

  const std::string& source() const { return source_; }

  friend bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<DiagramPoint> points_;
  std::string source_;
};

/// One pairing produced by boundary reduction, indices into the filtration.
/// death_index is empty for essential classes.
struct PersistencePair {
  int dim = 0;
  std::size_t birth_index = 0;
  std::optional<std::size_t> death_index;
  double birth = 0.0;
  double death = kInfinity;
};

/// Every pairing, including zero-length ones that the diagram drops.
std::vector<PersistencePair> persistence_pairs(const FilteredComplex& fc, int max_hom_dim);

/// Z/2 persistent homology in dimensions 0..max_hom_dim by column reduction
/// with clearing. Zero-length pairs are omitted.
PersistenceDiagram compute_persistence(const FilteredComplex& fc, int max_hom_dim);

/// beta_k = #{dim-k points with birth <= at < death}, for k = 0..max_dim
/// (max_dim < 0 means the diagram's own largest dimension).
std::vector<int> betti_numbers(const PersistenceDiagram& dgm, double at, int max_dim = -1);

/// Rank of H_k(F_r) -> H_k(F_s): #{dim-k points with birth <= r and death > s}.
int persistent_betti_rank(const PersistenceDiagram& dgm, int k, double r, double s);

}  // namespace tda
