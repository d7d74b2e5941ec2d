#pragma once

#include <string>

#include "tda/mapper.hpp"
#include "tda/persistence.hpp"
#include "tda/stats.hpp"

namespace tda::serialize {

/// {nodes:[{id,interval,cluster,size,members,filter:{min,mean,max}}],
///  edges:[{source,target,weight}], params:{filter,resolution,gain,clustering}}
std::string mapper_json(const MapperGraph& graph, int indent = -1);

/// Undirected graph; node labels carry the member count, edge labels the weight.
std::string mapper_dot(const MapperGraph& graph);

/// {kind, alpha, eta, seed, replicates, method, notes}. Landscape bands also
/// carry the center line; `eta` is a number for diagram bands and an array otherwise.
std::string band_json(const ConfidenceBand& band, int indent = 2);

/// [{dim, birth, death}] with death null for essential classes.
std::string diagram_json(const PersistenceDiagram& dgm);

}  // namespace tda::serialize
