#include "phavail/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "phavail/errors.hpp"
#include "phavail/report.hpp"

namespace phavail {

namespace {

constexpr int kWidth = 860, kHeight = 540;
constexpr int kLeft = 70, kRight = 24, kTop = 48, kBottom = 56;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

struct Range {
  double lo, hi;
  double span() const { return hi - lo; }
};

Range data_range(const std::vector<ChartSeries>& series, bool x_axis) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& s : series)
    for (double v : x_axis ? s.x : s.y) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (!(lo < hi)) {  // flat series: pad
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi};
}

// Tick step of the form {1,2,5} * 10^k giving 4-8 divisions.
double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) return m * mag;
  return 10.0 * mag;
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<ChartSeries>& series) {
  if (series.empty()) throw Error("chart requires at least one series");
  for (const auto& s : series)
    if (s.x.size() != s.y.size() || s.x.empty())
      throw Error("chart series '" + s.label + "' has mismatched or empty data");

  const Range xr = data_range(series, true);
  const Range yr = data_range(series, false);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / xr.span() * plot_w; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / yr.span() * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
      << " " << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" << esc(title) << "</text>\n";

  // Gridlines and ticks.
  svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  const double xstep = nice_step(xr.span());
  for (double x = std::ceil(xr.lo / xstep) * xstep; x <= xr.hi + 1e-9 * xr.span();
       x += xstep) {
    const double X = px(x);
    svg << "<line x1=\"" << format_sig(X, 6) << "\" y1=\"" << kTop << "\" x2=\""
        << format_sig(X, 6) << "\" y2=\"" << kTop + plot_h
        << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << format_sig(X, 6) << "\" y=\"" << kTop + plot_h + 16
        << "\" text-anchor=\"middle\">" << format_sig(x, 6) << "</text>\n";
  }
  const double ystep = nice_step(yr.span());
  for (double y = std::ceil(yr.lo / ystep) * ystep; y <= yr.hi + 1e-9 * yr.span();
       y += ystep) {
    const double Y = py(y);
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << format_sig(Y, 6) << "\" x2=\""
        << kLeft + plot_w << "\" y2=\"" << format_sig(Y, 6)
        << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << format_sig(Y + 4, 6)
        << "\" text-anchor=\"end\">" << format_sig(y, 6) << "</text>\n";
  }
  svg << "</g>\n";

  // Axes.
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << esc(x_label) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " << kTop + plot_h / 2 << ")\">"
      << esc(y_label) << "</text>\n";

  // Series polylines.
  for (std::size_t i = 0; i < series.size(); ++i) {
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[i % 8]
        << "\" stroke-width=\"1.6\" points=\"";
    for (std::size_t k = 0; k < series[i].x.size(); ++k) {
      if (k) svg << ' ';
      svg << format_sig(px(series[i].x[k]), 7) << ','
          << format_sig(py(series[i].y[k]), 7);
    }
    svg << "\"/>\n";
  }

  // Legend.
  const double lx = kLeft + plot_w - 190, ly = kTop + 10;
  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect x=\"" << lx - 8 << "\" y=\"" << ly - 14 << "\" width=\"198\" height=\""
      << 18 * series.size() + 8 << "\" fill=\"white\" fill-opacity=\"0.85\" "
         "stroke=\"#999\"/>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = ly + 18 * static_cast<double>(i);
    svg << "<line x1=\"" << lx << "\" y1=\"" << y - 4 << "\" x2=\"" << lx + 22
        << "\" y2=\"" << y - 4 << "\" stroke=\"" << kPalette[i % 8]
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << lx + 28 << "\" y=\"" << y << "\">" << esc(series[i].label)
        << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace phavail
