#pragma once

#include <optional>
#include <string>

#include "tda/landscape.hpp"
#include "tda/persistence.hpp"

namespace tda::svg {

struct PlotOptions {
  int width = 480;
  int height = 480;
  std::string title;
};

/// Birth/death scatter with the diagonal; essential points drawn on a line
/// above the finite range. With `band_eta`, the strip of points with
/// death - birth <= 2 eta is shaded.
std::string diagram(const PersistenceDiagram& dgm, const PlotOptions& options = {},
                    std::optional<double> band_eta = std::nullopt);

/// One horizontal bar per point, grouped by dimension.
std::string barcode(const PersistenceDiagram& dgm, const PlotOptions& options = {});

/// One polyline per level.
std::string landscape(const Landscape& l, const PlotOptions& options = {});

}  // namespace tda::svg
