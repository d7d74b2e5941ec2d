#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tda/complex.hpp"
#include "tda/landscape.hpp"
#include "tda/metric.hpp"
#include "tda/persistence.hpp"

namespace tda::io {

/// Diagram/landscape/feature file format revision, reported by `tda --version`.
inline constexpr int kFormatVersion = 1;

/// Shortest text that reads back to the same double; "inf"/"-inf" for infinities.
std::string format_double(double v);
/// Accepts anything strtod does plus "inf", "+inf", "-inf", "infinity".
double parse_double(const std::string& text);

/// One point per row, comma separated. A first row that does not parse as
/// numbers is taken as a header. A trailing non-numeric column is read as labels.
PointCloud read_points(std::istream& in);
PointCloud read_points(const std::filesystem::path& path);
void write_points(std::ostream& out, const PointCloud& points);

/// Square matrix; rows separated by newlines, entries by commas or whitespace.
DissimilarityMatrix read_matrix(std::istream& in);
DissimilarityMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(std::ostream& out, std::size_t n, const std::vector<double>& values);

/// `dim,birth,death` rows, optional header, `inf` for essential classes.
PersistenceDiagram read_diagram(std::istream& in, std::string source = {});
PersistenceDiagram read_diagram(const std::filesystem::path& path);
void write_diagram(std::ostream& out, const PersistenceDiagram& dgm);
void write_pairs(std::ostream& out, const std::vector<PersistencePair>& pairs);

/// One simplex per line: `value v0 v1 ... vk`. Blank lines and `#` comments skipped.
FilteredComplex read_complex(std::istream& in);
FilteredComplex read_complex(const std::filesystem::path& path);
void write_complex(std::ostream& out, const FilteredComplex& fc);

/// One value per line, or one comma/whitespace separated row.
std::vector<double> read_values(std::istream& in);
std::vector<double> read_values(const std::filesystem::path& path);

/// Header row of grid values, then one row per level.
void write_landscape(std::ostream& out, const Landscape& l);
Landscape read_landscape(std::istream& in);
Landscape read_landscape(const std::filesystem::path& path);

/// Header `d{dim}_k{level}_t{j}`, then one row per feature vector.
void write_features(std::ostream& out, const std::vector<int>& dims, std::size_t levels, std::size_t grid,
                    const std::vector<std::vector<double>>& rows);

std::string read_text(const std::filesystem::path& path);

}  // namespace tda::io
