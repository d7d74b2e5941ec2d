#pragma once

#include <span>
#include <vector>

#include "tda/persistence.hpp"

namespace tda {

/// Bottleneck distance between the dim-`dim` parts of two diagrams.
/// Finite points may be matched to the diagonal; essential points are matched
/// among themselves by birth, and unequal essential counts give +infinity.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

/// Same, over raw point lists (dimension fields are ignored).
double bottleneck(std::span<const DiagramPoint> a, std::span<const DiagramPoint> b);

/// Largest bottleneck distance over dimensions 0..max(a.max_dim, b.max_dim).
double bottleneck_all_dims(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// p-Wasserstein distance with the L-infinity ground metric, p >= 1 finite.
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim, double p);
double wasserstein(std::span<const DiagramPoint> a, std::span<const DiagramPoint> b, double p);

enum class DiagramMetric { bottleneck, wasserstein };

/// Symmetric matrix of pairwise distances (zero diagonal), row-major.
std::vector<double> distance_matrix(std::span<const PersistenceDiagram> diagrams, DiagramMetric metric,
                                    int dim, double p = 1.0);

/// Minimum-cost perfect assignment on a square cost matrix (row-major).
/// Entries equal to +infinity are forbidden. Returns the column of each row.
std::vector<std::size_t> solve_assignment(std::span<const double> cost, std::size_t n);

}  // namespace tda
