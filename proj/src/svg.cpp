#include "rankability/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "rankability/error.hpp"

namespace rankability {

namespace {

constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int palette_size = 6;

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range data_range(const std::vector<PlotSeries>& series, bool use_x) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const PlotSeries& s : series) {
    const std::vector<double>& v = use_x ? s.x : s.y;
    for (double value : v) {
      if (!std::isfinite(value)) continue;
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
  }
  if (!(lo <= hi)) return {0.0, 1.0};
  if (lo == hi) return {lo - 0.5, hi + 0.5};
  double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(4) << v;
  return out.str();
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

class Frame {
 public:
  Frame(double x0, double y0, double x1, double y1, Range xr, Range yr)
      : x0_(x0), y0_(y0), x1_(x1), y1_(y1), xr_(xr), yr_(yr) {}

  double px(double v) const { return x0_ + (v - xr_.lo) / (xr_.hi - xr_.lo) * (x1_ - x0_); }
  double py(double v) const { return y1_ - (v - yr_.lo) / (yr_.hi - yr_.lo) * (y1_ - y0_); }

  void draw_box(std::ostringstream& out) const {
    out << "<rect x='" << x0_ << "' y='" << y0_ << "' width='" << x1_ - x0_ << "' height='"
        << y1_ - y0_ << "' fill='none' stroke='#444' stroke-width='1'/>\n";
  }

  void draw_ticks(std::ostringstream& out) const {
    out << "<text x='" << x0_ << "' y='" << y1_ + 16 << "' font-size='11' fill='#444'>"
        << fmt(xr_.lo) << "</text>\n";
    out << "<text x='" << x1_ << "' y='" << y1_ + 16
        << "' font-size='11' fill='#444' text-anchor='end'>" << fmt(xr_.hi) << "</text>\n";
    out << "<text x='" << x0_ - 6 << "' y='" << y1_
        << "' font-size='11' fill='#444' text-anchor='end'>" << fmt(yr_.lo) << "</text>\n";
    out << "<text x='" << x0_ - 6 << "' y='" << y0_ + 10
        << "' font-size='11' fill='#444' text-anchor='end'>" << fmt(yr_.hi) << "</text>\n";
  }

 private:
  double x0_, y0_, x1_, y1_;
  Range xr_, yr_;
};

std::string chart(const std::string& title, const std::string& x_label,
                  const std::string& y_label, const std::vector<PlotSeries>& series, int width,
                  int height, bool lines) {
  Range xr = data_range(series, true);
  Range yr = data_range(series, false);
  double left = 56, right = 16, top = 36, bottom = 44;
  Frame frame(left, top, width - right, height - bottom, xr, yr);

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
      << "' viewBox='0 0 " << width << ' ' << height << "'>\n";
  out << "<rect width='" << width << "' height='" << height << "' fill='white'/>\n";
  out << "<text x='" << width / 2 << "' y='20' font-size='14' text-anchor='middle'>"
      << escape(title) << "</text>\n";
  frame.draw_box(out);
  frame.draw_ticks(out);
  out << "<text x='" << width / 2 << "' y='" << height - 8
      << "' font-size='12' text-anchor='middle'>" << escape(x_label) << "</text>\n";
  out << "<text x='14' y='" << height / 2 << "' font-size='12' text-anchor='middle' "
      << "transform='rotate(-90 14 " << height / 2 << ")'>" << escape(y_label) << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = palette[s % palette_size];
    const PlotSeries& ps = series[s];
    std::size_t count = std::min(ps.x.size(), ps.y.size());
    if (lines) {
      std::ostringstream points;
      bool open = false;
      for (std::size_t i = 0; i < count; ++i) {
        if (!std::isfinite(ps.x[i]) || !std::isfinite(ps.y[i])) {
          if (open) {
            out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='"
                << points.str() << "'/>\n";
            points.str("");
            open = false;
          }
          continue;
        }
        points << frame.px(ps.x[i]) << ',' << frame.py(ps.y[i]) << ' ';
        open = true;
      }
      if (open)
        out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='"
            << points.str() << "'/>\n";
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::isfinite(ps.x[i]) || !std::isfinite(ps.y[i])) continue;
      out << "<circle cx='" << frame.px(ps.x[i]) << "' cy='" << frame.py(ps.y[i])
          << "' r='2.5' fill='" << color << "' fill-opacity='0.7'/>\n";
    }
    if (!ps.name.empty()) {
      double lx = width - right - 130;
      double ly = top + 14 + 16 * static_cast<double>(s);
      out << "<circle cx='" << lx << "' cy='" << ly - 4 << "' r='4' fill='" << color << "'/>\n";
      out << "<text x='" << lx + 8 << "' y='" << ly << "' font-size='11'>" << escape(ps.name)
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string scatter_svg(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<PlotSeries>& series,
                        int width, int height) {
  return chart(title, x_label, y_label, series, width, height, false);
}

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<PlotSeries>& series,
                           int width, int height) {
  return chart(title, x_label, y_label, series, width, height, true);
}

std::string scatter_matrix_svg(const std::vector<std::string>& names,
                               const std::vector<std::vector<double>>& columns, int cell) {
  if (names.size() != columns.size())
    throw Error(Errc::length_mismatch, "one name per column required");
  int k = static_cast<int>(columns.size());
  int margin = 10;
  int size = k * cell + 2 * margin;

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << size << "' height='" << size
      << "' viewBox='0 0 " << size << ' ' << size << "'>\n";
  out << "<rect width='" << size << "' height='" << size << "' fill='white'/>\n";
  for (int row = 0; row < k; ++row) {
    for (int col = 0; col < k; ++col) {
      double x0 = margin + col * cell + 8;
      double y0 = margin + row * cell + 8;
      double x1 = margin + (col + 1) * cell - 8;
      double y1 = margin + (row + 1) * cell - 8;
      if (row == col) {
        out << "<rect x='" << x0 << "' y='" << y0 << "' width='" << x1 - x0 << "' height='"
            << y1 - y0 << "' fill='#f2f2f2' stroke='#444'/>\n";
        out << "<text x='" << 0.5 * (x0 + x1) << "' y='" << 0.5 * (y0 + y1)
            << "' font-size='12' text-anchor='middle'>" << escape(names[row]) << "</text>\n";
        continue;
      }
      PlotSeries pair;
      pair.x = columns[col];
      pair.y = columns[row];
      Range xr = data_range({pair}, true);
      Range yr = data_range({pair}, false);
      Frame frame(x0, y0, x1, y1, xr, yr);
      frame.draw_box(out);
      std::size_t count = std::min(pair.x.size(), pair.y.size());
      for (std::size_t i = 0; i < count; ++i) {
        if (!std::isfinite(pair.x[i]) || !std::isfinite(pair.y[i])) continue;
        out << "<circle cx='" << frame.px(pair.x[i]) << "' cy='" << frame.py(pair.y[i])
            << "' r='2' fill='" << palette[0] << "' fill-opacity='0.7'/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rankability
