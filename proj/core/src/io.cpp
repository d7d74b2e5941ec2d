#include "tda/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "tda/error.hpp"

namespace tda::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool blank_or_comment(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

std::vector<std::string> split_fields(const std::string& line, bool whitespace_too) {
  std::vector<std::string> out;
  if (whitespace_too) {
    std::string copy(line);
    std::replace(copy.begin(), copy.end(), ',', ' ');
    std::istringstream ss(copy);
    for (std::string f; ss >> f;) out.push_back(f);
    return out;
  }
  std::istringstream ss(line);
  for (std::string f; std::getline(ss, f, ',');) out.push_back(trim(f));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool try_parse(const std::string& text, double& out) {
  try {
    out = parse_double(text);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  std::string lower(t);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "+infinity")
    return std::numeric_limits<double>::infinity();
  if (lower == "-inf" || lower == "-infinity") return -std::numeric_limits<double>::infinity();
  if (t.empty()) throw InputError("empty number");
  const char* begin = t.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + t.size() || std::isnan(v)) throw InputError("not a number: '" + t + "'");
  return v;
}

PointCloud read_points(std::istream& in) {
  std::vector<double> coords;
  std::vector<std::string> labels;
  std::size_t dim = 0, lineno = 0;
  bool header_allowed = true, seen_data = false, with_labels = false;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    const auto fields = split_fields(line, false);
    std::vector<double> row;
    bool numeric = true;
    for (const auto& f : fields) {
      double v;
      if (!try_parse(f, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!seen_data) {
      // The first data row decides whether a trailing label column is present.
      if (!numeric) {
        double v;
        const bool all_but_last = fields.size() >= 2 && std::all_of(fields.begin(), fields.end() - 1, [&](const std::string& f) {
          return try_parse(f, v);
        });
        if (!all_but_last) {
          if (!header_allowed) throw InputError(where(lineno) + "non-numeric field");
          header_allowed = false;
          continue;
        }
        with_labels = true;
      }
      seen_data = true;
    }
    if (with_labels) {
      row.clear();
      for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
        double v;
        if (!try_parse(fields[i], v)) throw InputError(where(lineno) + "non-numeric coordinate '" + fields[i] + "'");
        row.push_back(v);
      }
      if (dim == 0) dim = row.size();
      labels.push_back(fields.back());
    } else if (!numeric) {
      throw InputError(where(lineno) + "non-numeric field");
    }
    if (dim == 0) dim = row.size();
    if (row.size() != dim)
      throw InputError(where(lineno) + "expected " + std::to_string(dim) + " columns, got " + std::to_string(row.size()));
    for (double v : row)
      if (!std::isfinite(v)) throw InputError(where(lineno) + "non-finite coordinate");
    coords.insert(coords.end(), row.begin(), row.end());
  }
  if (coords.empty()) throw InputError("point file has no points");
  return PointCloud(dim, std::move(coords), std::move(labels));
}

PointCloud read_points(const std::filesystem::path& path) {
  auto in = open(path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointCloud& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? "," : "") << format_double(p[j]);
    if (!points.labels().empty()) out << ',' << points.labels()[i];
    out << '\n';
  }
}

DissimilarityMatrix read_matrix(std::istream& in) {
  std::vector<double> values;
  std::size_t n = 0, rows = 0, lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    const auto fields = split_fields(line, true);
    std::vector<double> row;
    for (const auto& f : fields) {
      if (f.empty()) continue;
      double v;
      if (!try_parse(f, v)) throw InputError(where(lineno) + "non-numeric entry '" + f + "'");
      row.push_back(v);
    }
    if (n == 0) n = row.size();
    if (row.size() != n)
      throw InputError(where(lineno) + "expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
    values.insert(values.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0) throw InputError("matrix file is empty");
  if (rows != n) throw InputError("matrix is not square: " + std::to_string(rows) + " x " + std::to_string(n));
  return DissimilarityMatrix(n, std::move(values));
}

DissimilarityMatrix read_matrix(const std::filesystem::path& path) {
  auto in = open(path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, std::size_t n, const std::vector<double>& values) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << format_double(values[i * n + j]);
    out << '\n';
  }
}

PersistenceDiagram read_diagram(std::istream& in, std::string source) {
  std::vector<DiagramPoint> pts;
  std::size_t lineno = 0;
  bool first = true;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    const auto fields = split_fields(line, true);
    double d, b, e;
    const bool ok = fields.size() == 3 && try_parse(fields[0], d) && try_parse(fields[1], b) && try_parse(fields[2], e);
    if (!ok) {
      if (first) {
        first = false;
        continue;
      }
      throw InputError(where(lineno) + "expected dim,birth,death");
    }
    first = false;
    if (d < 0 || d != std::floor(d)) throw InputError(where(lineno) + "bad dimension");
    pts.push_back({static_cast<int>(d), b, e});
  }
  return PersistenceDiagram(std::move(pts), std::move(source));
}

PersistenceDiagram read_diagram(const std::filesystem::path& path) {
  auto in = open(path);
  return read_diagram(in, path.string());
}

void write_diagram(std::ostream& out, const PersistenceDiagram& dgm) {
  out << "dim,birth,death\n";
  for (const auto& p : dgm) out << p.dim << ',' << format_double(p.birth) << ',' << format_double(p.death) << '\n';
}

void write_pairs(std::ostream& out, const std::vector<PersistencePair>& pairs) {
  out << "dim,birth,death,birth_index,death_index\n";
  for (const auto& p : pairs) {
    out << p.dim << ',' << format_double(p.birth) << ',' << format_double(p.death) << ',' << p.birth_index << ',';
    if (p.death_index) out << *p.death_index;
    out << '\n';
  }
}

FilteredComplex read_complex(std::istream& in) {
  std::vector<FilteredSimplex> simplices;
  std::size_t lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    const auto fields = split_fields(line, true);
    if (fields.size() < 2) throw InputError(where(lineno) + "expected 'value v0 ... vk'");
    double value;
    if (!try_parse(fields[0], value) || !std::isfinite(value)) throw InputError(where(lineno) + "bad filtration value");
    std::vector<Vertex> vs;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v;
      if (!try_parse(fields[i], v) || v < 0 || v != std::floor(v) || v > 4294967295.0)
        throw InputError(where(lineno) + "bad vertex '" + fields[i] + "'");
      vs.push_back(static_cast<Vertex>(v));
    }
    simplices.push_back({Simplex(std::move(vs)), value});
  }
  return FilteredComplex(std::move(simplices));
}

FilteredComplex read_complex(const std::filesystem::path& path) {
  auto in = open(path);
  return read_complex(in);
}

void write_complex(std::ostream& out, const FilteredComplex& fc) {
  for (const auto& fs : fc) {
    out << format_double(fs.value);
    for (Vertex v : fs.simplex.vertices()) out << ' ' << v;
    out << '\n';
  }
}

std::vector<double> read_values(std::istream& in) {
  std::vector<double> out;
  std::size_t lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    for (const auto& f : split_fields(line, true)) {
      if (f.empty()) continue;
      double v;
      if (!try_parse(f, v)) throw InputError(where(lineno) + "non-numeric value '" + f + "'");
      out.push_back(v);
    }
  }
  return out;
}

std::vector<double> read_values(const std::filesystem::path& path) {
  auto in = open(path);
  return read_values(in);
}

void write_landscape(std::ostream& out, const Landscape& l) {
  const auto& g = l.grid();
  for (std::size_t j = 0; j < g.count; ++j) out << (j ? "," : "") << format_double(g.at(j));
  out << '\n';
  for (std::size_t k = 1; k <= l.levels(); ++k) {
    for (std::size_t j = 0; j < g.count; ++j) out << (j ? "," : "") << format_double(l(k, j));
    out << '\n';
  }
}

Landscape read_landscape(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::vector<double> row;
    for (const auto& f : split_fields(line, false)) {
      double v;
      if (!try_parse(f, v)) throw InputError(where(lineno) + "non-numeric value '" + f + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2) throw InputError("landscape file needs a grid row and at least one level");
  const auto& t = rows.front();
  if (t.size() < 2 || t.front() != 0.0) throw InputError("landscape grid must start at 0 with at least 2 points");
  const LandscapeGrid grid{t.back(), t.size()};
  for (std::size_t j = 0; j < t.size(); ++j)
    if (std::abs(grid.at(j) - t[j]) > 1e-12 * std::max(1.0, grid.t_max))
      throw InputError("landscape grid is not uniform");
  std::vector<double> values;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].size() != t.size()) throw InputError("landscape level " + std::to_string(k) + " has wrong length");
    values.insert(values.end(), rows[k].begin(), rows[k].end());
  }
  return Landscape(grid, rows.size() - 1, std::move(values));
}

Landscape read_landscape(const std::filesystem::path& path) {
  auto in = open(path);
  return read_landscape(in);
}

void write_features(std::ostream& out, const std::vector<int>& dims, std::size_t levels, std::size_t grid,
                    const std::vector<std::vector<double>>& rows) {
  bool first = true;
  for (int d : dims)
    for (std::size_t k = 1; k <= levels; ++k)
      for (std::size_t j = 0; j < grid; ++j) {
        out << (first ? "" : ",") << 'd' << d << "_k" << k << "_t" << j;
        first = false;
      }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

std::string read_text(const std::filesystem::path& path) {
  auto in = open(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tda::io
