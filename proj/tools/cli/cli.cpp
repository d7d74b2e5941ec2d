#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tda/complex.hpp"
#include "tda/diagmetric.hpp"
#include "tda/error.hpp"
#include "tda/io.hpp"
#include "tda/landscape.hpp"
#include "tda/mapper.hpp"
#include "tda/metric.hpp"
#include "tda/persistence.hpp"
#include "tda/serialize.hpp"
#include "tda/stats.hpp"
#include "tda/svg.hpp"
#include "tda/version.hpp"

namespace tda::cli {

namespace fs = std::filesystem;

namespace {

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw InputError("cannot write " + path_);
    f << text;
    if (!f) throw InputError("write failed: " + path_);
  }

 private:
  std::string path_;
  std::ostream& fallback_;
};

MetricSpace load_data(const std::string& path, bool matrix) {
  if (matrix) return MetricSpace(io::read_matrix(fs::path(path)));
  return MetricSpace(io::read_points(fs::path(path)));
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const double d = io::parse_double(item);
    if (d < 0 || d != static_cast<int>(d)) throw InputError("bad dimension '" + item + "'");
    dims.push_back(static_cast<int>(d));
  }
  if (dims.empty()) throw InputError("no dimensions given");
  return dims;
}

FiltrationKind parse_filtration(const std::string& name) {
  if (name == "rips") return FiltrationKind::rips;
  if (name == "cech") return FiltrationKind::cech;
  throw InputError("unknown filtration '" + name + "'");
}

std::vector<Simplex> read_vertex_lists(const fs::path& path) {
  std::vector<Simplex> out;
  std::istringstream in(io::read_text(path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<Vertex> vs;
    std::string tok;
    while (fields >> tok) {
      if (tok.front() == '#') break;
      const double v = io::parse_double(tok);
      if (v < 0 || v != static_cast<double>(static_cast<Vertex>(v)))
        throw InputError("line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
      vs.push_back(static_cast<Vertex>(v));
    }
    if (!vs.empty()) out.emplace_back(std::move(vs));
  }
  return out;
}

std::string render(const std::function<void(std::ostream&)>& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> warnings;
};

LandscapeGrid make_grid(double t_max, std::size_t count) {
  LandscapeGrid g{t_max, count};
  if (count < 2) throw InputError("grid needs at least 2 samples");
  if (!(t_max > 0.0)) throw InputError("t-max must be positive");
  return g;
}

// Each add_* registers one subcommand and stores its action in `actions`.
using Actions = std::map<CLI::App*, std::function<void()>>;

void add_rips(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, output, raw;
    bool matrix = false;
    double max_edge = 1.0;
    int max_dim = 2;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("rips-persistence", "Vietoris-Rips persistence diagram");
  sub->add_option("input", o->input, "points CSV or dissimilarity matrix")->required();
  sub->add_flag("--matrix", o->matrix, "input is a dissimilarity matrix");
  sub->add_option("--max-edge", o->max_edge, "largest edge length")->capture_default_str();
  sub->add_option("--max-dim", o->max_dim, "largest simplex dimension")->capture_default_str();
  sub->add_option("-o,--output", o->output, "diagram CSV");
  sub->add_option("--raw-pairs", o->raw, "all pairs including zero-length ones");
  actions[sub] = [o, &ctx] {
    if (o->max_dim < 1) throw InputError("--max-dim must be at least 1");
    const auto data = load_data(o->input, o->matrix);
    const auto fc = rips_filtration(data, o->max_edge, o->max_dim, &ctx.warnings);
    const int hom = std::max(0, std::min(o->max_dim, static_cast<int>(data.size()) - 1) - 1);
    if (!o->raw.empty())
      Output(o->raw, ctx.out).write(render([&](std::ostream& s) { io::write_pairs(s, persistence_pairs(fc, hom)); }));
    const auto dgm = compute_persistence(fc, hom);
    Output(o->output, ctx.out).write(render([&](std::ostream& s) { io::write_diagram(s, dgm); }));
  };
}

void add_cech(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, output;
    double max_radius = 1.0;
    int max_dim = 2;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("cech-persistence", "Cech persistence diagram (radius scale)");
  sub->add_option("input", o->input, "points CSV")->required();
  sub->add_option("--max-radius", o->max_radius, "largest ball radius")->capture_default_str();
  sub->add_option("--max-dim", o->max_dim, "largest simplex dimension")->capture_default_str();
  sub->add_option("-o,--output", o->output, "diagram CSV");
  actions[sub] = [o, &ctx] {
    if (o->max_dim < 1) throw InputError("--max-dim must be at least 1");
    const auto pts = io::read_points(fs::path(o->input));
    const auto fc = cech_filtration(pts, o->max_radius, o->max_dim, &ctx.warnings);
    const int hom = std::max(0, std::min(o->max_dim, static_cast<int>(pts.size()) - 1) - 1);
    const auto dgm = compute_persistence(fc, hom);
    Output(o->output, ctx.out).write(render([&](std::ostream& s) { io::write_diagram(s, dgm); }));
  };
}

void add_function(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string values, complex, filtered, output;
    int max_hom_dim = -1;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("function-persistence", "sublevel-set persistence of a vertex function");
  sub->add_option("values", o->values, "vertex values, one per vertex (omit with --filtered)");
  sub->add_option("--complex", o->complex, "simplices as vertex lists; default is the path graph");
  sub->add_option("--filtered", o->filtered, "explicit filtration, lines 'value v0 ... vk'");
  sub->add_option("--max-hom-dim", o->max_hom_dim, "largest homology dimension (default: complex dimension)");
  sub->add_option("-o,--output", o->output, "diagram CSV");
  actions[sub] = [o, &ctx] {
    FilteredComplex fc;
    if (!o->filtered.empty()) {
      fc = io::read_complex(fs::path(o->filtered));
    } else {
      if (o->values.empty()) throw InputError("vertex values file required");
      const auto values = io::read_values(fs::path(o->values));
      if (o->complex.empty()) {
        fc = path_filtration(values);
      } else {
        const auto simplices = read_vertex_lists(o->complex);
        fc = lower_star_filtration(simplices, values);
      }
    }
    const int hom = o->max_hom_dim >= 0 ? o->max_hom_dim : std::max(0, fc.max_dim());
    const auto dgm = compute_persistence(fc, hom);
    Output(o->output, ctx.out).write(render([&](std::ostream& s) { io::write_diagram(s, dgm); }));
  };
}

void add_dtm(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, queries, output;
    double mass = 0.1, power = 2.0;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("dtm", "empirical distance to measure");
  sub->add_option("input", o->input, "sample points CSV")->required();
  sub->add_option("--mass", o->mass, "mass parameter m in (0, 1]")->capture_default_str();
  sub->add_option("--power", o->power, "exponent r >= 1")->capture_default_str();
  sub->add_option("--queries", o->queries, "query points CSV (default: the sample)");
  sub->add_option("-o,--output", o->output, "one value per query");
  actions[sub] = [o, &ctx] {
    auto sample = io::read_points(fs::path(o->input));
    const auto queries = o->queries.empty() ? sample : io::read_points(fs::path(o->queries));
    const DtmField field(std::move(sample), o->mass, o->power);
    const auto values = field.values(queries);
    Output(o->output, ctx.out).write(render([&](std::ostream& s) {
      for (double v : values) s << io::format_double(v) << '\n';
    }));
  };
}

void add_diagram_distance(CLI::App& app, Actions& actions, Context& ctx, bool wasserstein_metric) {
  struct O {
    std::string a, b, output;
    int dim = -1;
    double p = 1.0;
  };
  auto o = std::make_shared<O>();
  auto* sub = wasserstein_metric ? app.add_subcommand("wasserstein", "Wasserstein distance between two diagrams")
                                 : app.add_subcommand("bottleneck", "bottleneck distance between two diagrams");
  sub->add_option("a", o->a, "first diagram CSV")->required();
  sub->add_option("b", o->b, "second diagram CSV")->required();
  sub->add_option("--dim", o->dim, "homology dimension (default: maximum over all)");
  if (wasserstein_metric) sub->add_option("-p,--p", o->p, "order p >= 1")->capture_default_str();
  sub->add_option("-o,--output", o->output, "result file");
  actions[sub] = [o, &ctx, wasserstein_metric] {
    const auto a = io::read_diagram(fs::path(o->a));
    const auto b = io::read_diagram(fs::path(o->b));
    double d = 0.0;
    if (o->dim >= 0) {
      d = wasserstein_metric ? wasserstein(a, b, o->dim, o->p) : bottleneck(a, b, o->dim);
    } else if (wasserstein_metric) {
      // Summing p-th powers over dimensions is the W_p distance of the graded diagrams.
      double total = 0.0;
      for (int k = 0; k <= std::max(a.max_dim(), b.max_dim()); ++k) total += std::pow(wasserstein(a, b, k, o->p), o->p);
      d = std::pow(total, 1.0 / o->p);
    } else {
      d = bottleneck_all_dims(a, b);
    }
    Output(o->output, ctx.out).write(io::format_double(d) + "\n");
  };
}

void add_distance_matrix(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string dir, output, names, metric = "bottleneck";
    int dim = 1;
    double p = 1.0;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("distance-matrix", "pairwise diagram distances over a directory of diagram CSVs");
  sub->add_option("dir", o->dir, "directory of *.csv diagrams, taken in file-name order")->required();
  sub->add_option("--metric", o->metric, "bottleneck or wasserstein")->capture_default_str();
  sub->add_option("--dim", o->dim, "homology dimension")->capture_default_str();
  sub->add_option("-p,--p", o->p, "Wasserstein order")->capture_default_str();
  sub->add_option("-o,--output", o->output, "matrix CSV");
  sub->add_option("--names", o->names, "write the row order (file names) here");
  actions[sub] = [o, &ctx] {
    if (!fs::is_directory(o->dir)) throw InputError("not a directory: " + o->dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(o->dir))
      if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no diagram CSVs in " + o->dir);
    DiagramMetric metric;
    if (o->metric == "bottleneck")
      metric = DiagramMetric::bottleneck;
    else if (o->metric == "wasserstein")
      metric = DiagramMetric::wasserstein;
    else
      throw InputError("unknown metric '" + o->metric + "'");
    std::vector<PersistenceDiagram> dgms;
    for (const auto& f : files) dgms.push_back(io::read_diagram(f));
    const auto m = distance_matrix(dgms, metric, o->dim, o->p);
    Output(o->output, ctx.out).write(render([&](std::ostream& s) { io::write_matrix(s, dgms.size(), m); }));
    if (!o->names.empty())
      Output(o->names, ctx.out).write(render([&](std::ostream& s) {
        for (const auto& f : files) s << f.filename().string() << '\n';
      }));
  };
}

struct GridOptions {
  double t_max = 1.0;
  std::size_t grid = 1000;
  std::size_t levels = 3;
};

void add_grid_options(CLI::App* sub, GridOptions& g) {
  sub->add_option("--t-max", g.t_max, "right end of the grid")->capture_default_str();
  sub->add_option("--grid", g.grid, "number of grid points")->capture_default_str();
  sub->add_option("--levels", g.levels, "number of landscape levels")->capture_default_str();
}

void add_landscape(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, output;
    int dim = 1;
    GridOptions g;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("landscape", "persistence landscape of one diagram");
  sub->add_option("input", o->input, "diagram CSV")->required();
  sub->add_option("--dim", o->dim, "homology dimension")->capture_default_str();
  add_grid_options(sub, o->g);
  sub->add_option("-o,--output", o->output, "landscape CSV");
  actions[sub] = [o, &ctx] {
    const auto dgm = io::read_diagram(fs::path(o->input));
    const auto l = landscape_from_diagram(dgm, o->dim, o->g.levels, make_grid(o->g.t_max, o->g.grid), &ctx.warnings);
    Output(o->output, ctx.out).write(render([&](std::ostream& s) { io::write_landscape(s, l); }));
  };
}

void add_average_landscape(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, output, filtration = "rips";
    bool matrix = false;
    std::size_t m = 0, count = 100;
    double scale = 1.0;
    int dim = 1;
    std::uint64_t seed = 0;
    GridOptions g;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("average-landscape", "mean landscape over random subsamples");
  sub->add_option("input", o->input, "points CSV or dissimilarity matrix")->required();
  sub->add_flag("--matrix", o->matrix, "input is a dissimilarity matrix");
  sub->add_option("-m,--subsample-size", o->m, "subsample size m")->required();
  sub->add_option("--count", o->count, "number of subsamples")->capture_default_str();
  sub->add_option("--filtration", o->filtration, "rips or cech")->capture_default_str();
  sub->add_option("--scale", o->scale, "max edge (rips) or max radius (cech)")->capture_default_str();
  sub->add_option("--dim", o->dim, "homology dimension")->capture_default_str();
  sub->add_option("--seed", o->seed, "random seed")->required();
  add_grid_options(sub, o->g);
  sub->add_option("-o,--output", o->output, "landscape CSV");
  actions[sub] = [o, &ctx] {
    const auto data = load_data(o->input, o->matrix);
    const LandscapePipeline pipe{parse_filtration(o->filtration), o->scale, o->dim, o->g.levels,
                                 make_grid(o->g.t_max, o->g.grid)};
    const auto l = subsample_average_landscape(data, o->m, o->count, pipe, o->seed);
    Output(o->output, ctx.out).write(render([&](std::ostream& s) { io::write_landscape(s, l); }));
  };
}

void add_landscape_features(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::vector<std::string> inputs;
    std::string output, dims = "0,1";
    GridOptions g;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("landscape-features", "flattened landscape feature rows, one per diagram");
  sub->add_option("inputs", o->inputs, "diagram CSVs")->required();
  sub->add_option("--dims", o->dims, "comma separated homology dimensions")->capture_default_str();
  add_grid_options(sub, o->g);
  sub->add_option("-o,--output", o->output, "feature CSV");
  actions[sub] = [o, &ctx] {
    const auto dims = parse_dims(o->dims);
    const auto grid = make_grid(o->g.t_max, o->g.grid);
    std::vector<std::vector<double>> rows;
    for (const auto& f : o->inputs) rows.push_back(landscape_features(io::read_diagram(fs::path(f)), dims, o->g.levels, grid));
    Output(o->output, ctx.out).write(render([&](std::ostream& s) { io::write_features(s, dims, o->g.levels, o->g.grid, rows); }));
  };
}

void add_mapper(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, output, format = "json", filter = "height", clustering = "epsilon:0.4";
    bool matrix = false;
    std::size_t intervals = 4;
    double resolution = 0.0, gain = 0.3;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("mapper", "Mapper graph over a 1-D filter");
  sub->add_option("input", o->input, "points CSV or dissimilarity matrix")->required();
  sub->add_flag("--matrix", o->matrix, "input is a dissimilarity matrix");
  sub->add_option("--filter", o->filter,
                  "eccentricity | centrality | height | coordinate:j | distance_to_point:i | density:h")
      ->capture_default_str();
  sub->add_option("--intervals", o->intervals, "number of cover intervals")->capture_default_str();
  sub->add_option("--resolution", o->resolution, "interval length in filter units (overrides --intervals)");
  sub->add_option("--gain", o->gain, "overlap fraction in (0, 1)")->capture_default_str();
  sub->add_option("--clustering", o->clustering, "epsilon:e | knn:k | linkage:h")->capture_default_str();
  sub->add_option("--format", o->format, "json or dot")->capture_default_str();
  sub->add_option("-o,--output", o->output, "graph file");
  actions[sub] = [o, &ctx] {
    if (o->format != "json" && o->format != "dot") throw InputError("unknown format '" + o->format + "'");
    const auto data = load_data(o->input, o->matrix);
    MapperSettings settings;
    settings.filter = o->filter;
    settings.gain = o->gain;
    settings.clustering = ClusteringConfig::parse(o->clustering);
    if (o->resolution > 0.0)
      settings.resolution = o->resolution;
    else
      settings.intervals = o->intervals;
    const auto g = run_mapper(data, settings, &ctx.warnings);
    Output(o->output, ctx.out).write(o->format == "json" ? serialize::mapper_json(g, 2) + "\n" : serialize::mapper_dot(g));
  };
}

void add_band_subsample(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, output, diagram;
    std::size_t b = 0, replicates = 200;
    double alpha = 0.05;
    int dim = 1;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("band-subsample", "diagram band from the subsampled Hausdorff quantile");
  sub->add_option("input", o->input, "points CSV")->required();
  sub->add_option("-b,--subsample-size", o->b, "subsample size (default ceil(n / (2 log n)), a heuristic)");
  sub->add_option("--alpha", o->alpha, "1 - confidence level")->capture_default_str();
  sub->add_option("--replicates", o->replicates, "number of subsamples")->capture_default_str();
  sub->add_option("--seed", o->seed, "random seed")->required();
  sub->add_option("--diagram", o->diagram, "report how many points of this diagram lie outside the band");
  sub->add_option("--dim", o->dim, "homology dimension for --diagram")->capture_default_str();
  sub->add_option("-o,--output", o->output, "band JSON");
  actions[sub] = [o, &ctx] {
    const auto pts = io::read_points(fs::path(o->input));
    const std::size_t b = o->b ? o->b : default_subsample_size(pts.size());
    auto band = subsampling_eta(pts, b, o->alpha, o->replicates, o->seed, &ctx.warnings);
    if (!o->diagram.empty()) {
      const auto n = count_significant(io::read_diagram(fs::path(o->diagram)), o->dim, band.radius());
      band.notes.push_back("significant dim-" + std::to_string(o->dim) + " points: " + std::to_string(n));
    }
    Output(o->output, ctx.out).write(serialize::band_json(band) + "\n");
  };
}

void add_band_bootstrap(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, output, filtration = "rips";
    bool matrix = false;
    std::size_t replicates = 200;
    double alpha = 0.05, scale = 1.0;
    int max_hom_dim = 1;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("band-bootstrap", "diagram band from the bottleneck bootstrap");
  sub->add_option("input", o->input, "points CSV or dissimilarity matrix")->required();
  sub->add_flag("--matrix", o->matrix, "input is a dissimilarity matrix (rows/columns resampled jointly)");
  sub->add_option("--filtration", o->filtration, "rips or cech")->capture_default_str();
  sub->add_option("--scale", o->scale, "max edge (rips) or max radius (cech)")->capture_default_str();
  sub->add_option("--max-hom-dim", o->max_hom_dim, "largest homology dimension compared")->capture_default_str();
  sub->add_option("--alpha", o->alpha, "1 - confidence level")->capture_default_str();
  sub->add_option("--replicates", o->replicates, "bootstrap replicates (>= 20)")->capture_default_str();
  sub->add_option("--seed", o->seed, "random seed")->required();
  sub->add_option("-o,--output", o->output, "band JSON");
  actions[sub] = [o, &ctx] {
    const auto data = load_data(o->input, o->matrix);
    const BootstrapPipeline pipe{parse_filtration(o->filtration), o->scale, o->max_hom_dim};
    const auto band = bottleneck_bootstrap(data, pipe, o->alpha, o->replicates, o->seed);
    Output(o->output, ctx.out).write(serialize::band_json(band) + "\n");
  };
}

void add_band_landscape(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::vector<std::string> inputs;
    std::string output;
    std::size_t replicates = 1000, level = 1;
    double alpha = 0.05;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("band-landscape", "uniform multiplier-bootstrap band for the mean landscape");
  sub->add_option("inputs", o->inputs, "landscape CSVs (at least two, shared grid)")->required();
  sub->add_option("--level", o->level, "landscape level k")->capture_default_str();
  sub->add_option("--alpha", o->alpha, "1 - confidence level")->capture_default_str();
  sub->add_option("--replicates", o->replicates, "multiplier replicates")->capture_default_str();
  sub->add_option("--seed", o->seed, "random seed")->required();
  sub->add_option("-o,--output", o->output, "band JSON");
  actions[sub] = [o, &ctx] {
    std::vector<Landscape> ls;
    for (const auto& f : o->inputs) ls.push_back(io::read_landscape(fs::path(f)));
    const auto band = landscape_band(ls, o->alpha, o->replicates, o->seed, o->level);
    Output(o->output, ctx.out).write(serialize::band_json(band) + "\n");
  };
}

double band_radius_from_json(const std::string& path) {
  // Only the diagram-band "eta" number is needed; avoid a JSON dependency here.
  const std::string text = io::read_text(path);
  const auto key = text.find("\"eta\"");
  if (key == std::string::npos) throw InputError("band file has no eta: " + path);
  const auto colon = text.find(':', key);
  const auto end = text.find_first_of(",}\n", colon);
  return io::parse_double(text.substr(colon + 1, end - colon - 1));
}

void add_plot(CLI::App& app, Actions& actions, Context& ctx) {
  struct O {
    std::string input, output, kind = "diagram", band, title;
  };
  auto o = std::make_shared<O>();
  auto* sub = app.add_subcommand("plot", "static SVG of a diagram, barcode or landscape");
  sub->add_option("input", o->input, "diagram CSV (diagram, barcode) or landscape CSV")->required();
  sub->add_option("--kind", o->kind, "diagram | barcode | landscape")->capture_default_str();
  sub->add_option("--band", o->band, "diagram band JSON to overlay");
  sub->add_option("--title", o->title, "plot title");
  sub->add_option("-o,--output", o->output, "SVG file");
  actions[sub] = [o, &ctx] {
    svg::PlotOptions opts;
    opts.title = o->title;
    std::string doc;
    if (o->kind == "diagram") {
      std::optional<double> eta;
      if (!o->band.empty()) eta = band_radius_from_json(o->band);
      doc = svg::diagram(io::read_diagram(fs::path(o->input)), opts, eta);
    } else if (o->kind == "barcode") {
      doc = svg::barcode(io::read_diagram(fs::path(o->input)), opts);
    } else if (o->kind == "landscape") {
      doc = svg::landscape(io::read_landscape(fs::path(o->input)), opts);
    } else {
      throw InputError("unknown plot kind '" + o->kind + "'");
    }
    Output(o->output, ctx.out).write(doc);
  };
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, {}};
  CLI::App app{"Topological data analysis toolkit", "tda"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("tda ") + kVersion + " (diagram/landscape format " +
                                        std::to_string(io::kFormatVersion) + ")");
  app.set_config("--config", "", "key = value file; [subcommand] sections; command line wins");

  Actions actions;
  add_rips(app, actions, ctx);
  add_cech(app, actions, ctx);
  add_function(app, actions, ctx);
  add_dtm(app, actions, ctx);
  add_diagram_distance(app, actions, ctx, false);
  add_diagram_distance(app, actions, ctx, true);
  add_distance_matrix(app, actions, ctx);
  add_landscape(app, actions, ctx);
  add_average_landscape(app, actions, ctx);
  add_landscape_features(app, actions, ctx);
  add_mapper(app, actions, ctx);
  add_band_subsample(app, actions, ctx);
  add_band_bootstrap(app, actions, ctx);
  add_band_landscape(app, actions, ctx);
  add_plot(app, actions, ctx);
  for (auto* sub : app.get_subcommands({})) sub->configurable();

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << '\n';
    return kExitInput;
  }

  try {
    // A subcommand named both on the command line and in a config section is listed twice.
    auto chosen = app.get_subcommands();
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    for (auto* sub : chosen) actions.at(sub)();
    for (const auto& w : ctx.warnings) err << "warning: " << one_line(w) << '\n';
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: input: " << one_line(e.what()) << '\n';
    return kExitInput;
  } catch (const InvariantError& e) {
    err << "error: internal: " << one_line(e.what()) << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << '\n';
    return kExitInternal;
  }
}

}  // namespace tda::cli
