#include "tda/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tda::svg {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kMargin = 40;

const char* color(std::size_t i) { return kPalette[i % (sizeof kPalette / sizeof *kPalette)]; }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(const PlotOptions& o, double xmin, double xmax, double ymin, double ymax)
      : o_(o), xmin_(xmin), xmax_(xmax > xmin ? xmax : xmin + 1), ymin_(ymin), ymax_(ymax > ymin ? ymax : ymin + 1) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width << "\" height=\"" << o.height
         << "\" viewBox=\"0 0 " << o.width << ' ' << o.height << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!o.title.empty())
      out_ << "<text x=\"" << o.width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           << "font-size=\"14\">" << escape(o.title) << "</text>\n";
  }

  double x(double v) const { return kMargin + (v - xmin_) / (xmax_ - xmin_) * (o_.width - 2 * kMargin); }
  double y(double v) const { return o_.height - kMargin - (v - ymin_) / (ymax_ - ymin_) * (o_.height - 2 * kMargin); }

  void axes() {
    out_ << "<g stroke=\"black\" stroke-width=\"1\">"
         << "<line x1=\"" << kMargin << "\" y1=\"" << o_.height - kMargin << "\" x2=\"" << o_.width - kMargin
         << "\" y2=\"" << o_.height - kMargin << "\"/>"
         << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
         << o_.height - kMargin << "\"/></g>\n";
    label(kMargin, o_.height - kMargin + 15, xmin_, "start");
    label(o_.width - kMargin, o_.height - kMargin + 15, xmax_, "end");
    label(kMargin - 4, o_.height - kMargin, ymin_, "end");
    label(kMargin - 4, kMargin + 4, ymax_, "end");
  }

  void label(double px, double py, double v, const char* anchor) {
    out_ << "<text x=\"" << px << "\" y=\"" << py << "\" text-anchor=\"" << anchor
         << "\" font-family=\"sans-serif\" font-size=\"10\">" << v << "</text>\n";
  }

  std::ostringstream& raw() { return out_; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  PlotOptions o_;
  double xmin_, xmax_, ymin_, ymax_;
  std::ostringstream out_;
};

double finite_max(const PersistenceDiagram& dgm) {
  double hi = 0.0;
  for (const auto& p : dgm) {
    hi = std::max(hi, p.birth);
    if (!p.essential()) hi = std::max(hi, p.death);
  }
  return hi > 0.0 ? hi : 1.0;
}

}  // namespace

std::string diagram(const PersistenceDiagram& dgm, const PlotOptions& options, std::optional<double> band_eta) {
  const double hi = finite_max(dgm);
  const double inf_row = hi * 1.1;
  const double top = hi * 1.15;
  Canvas c(options, 0.0, top, 0.0, top);
  auto& o = c.raw();
  if (band_eta) {
    const double w = 2.0 * *band_eta;
    o << "<polygon fill=\"#cccccc\" fill-opacity=\"0.5\" points=\"" << c.x(0) << ',' << c.y(0) << ' ' << c.x(top)
      << ',' << c.y(top) << ' ' << c.x(std::max(0.0, top - w)) << ',' << c.y(top) << ' ' << c.x(0) << ','
      << c.y(std::min(top, w)) << "\"/>\n";
  }
  c.axes();
  o << "<line x1=\"" << c.x(0) << "\" y1=\"" << c.y(0) << "\" x2=\"" << c.x(top) << "\" y2=\"" << c.y(top)
    << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  o << "<line x1=\"" << c.x(0) << "\" y1=\"" << c.y(inf_row) << "\" x2=\"" << c.x(top) << "\" y2=\"" << c.y(inf_row)
    << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  for (const auto& p : dgm) {
    const double d = p.essential() ? inf_row : p.death;
    o << "<circle class=\"dim" << p.dim << "\" cx=\"" << c.x(p.birth) << "\" cy=\"" << c.y(d)
      << "\" r=\"3\" fill=\"" << color(static_cast<std::size_t>(p.dim)) << "\"/>\n";
  }
  return c.finish();
}

std::string barcode(const PersistenceDiagram& dgm, const PlotOptions& options) {
  const double hi = finite_max(dgm) * 1.1;
  const double rows = static_cast<double>(std::max<std::size_t>(dgm.size(), 1));
  Canvas c(options, 0.0, hi, 0.0, rows + 1);
  auto& o = c.raw();
  c.axes();
  double row = rows;
  for (const auto& p : dgm) {
    const double end = p.essential() ? hi : p.death;
    o << "<line class=\"dim" << p.dim << "\" x1=\"" << c.x(p.birth) << "\" y1=\"" << c.y(row) << "\" x2=\""
      << c.x(end) << "\" y2=\"" << c.y(row) << "\" stroke=\"" << color(static_cast<std::size_t>(p.dim))
      << "\" stroke-width=\"2\"/>\n";
    row -= 1.0;
  }
  return c.finish();
}

std::string landscape(const Landscape& l, const PlotOptions& options) {
  double hi = 0.0;
  for (double v : l.values()) hi = std::max(hi, v);
  Canvas c(options, 0.0, l.grid().t_max, 0.0, hi > 0.0 ? hi * 1.1 : 1.0);
  auto& o = c.raw();
  c.axes();
  for (std::size_t k = 1; k <= l.levels(); ++k) {
    o << "<polyline class=\"level" << k << "\" fill=\"none\" stroke=\"" << color(k - 1) << "\" points=\"";
    for (std::size_t j = 0; j < l.grid().count; ++j) o << (j ? " " : "") << c.x(l.grid().at(j)) << ',' << c.y(l(k, j));
    o << "\"/>\n";
  }
  return c.finish();
}

}  // namespace tda::svg
