// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/** @file
 *  @brief Minimal self-contained SVG plotting: line/scatter series, axes
 *         with nice ticks, horizontal reference lines, and a legend.
 *
 *  The output embeds no external assets, so a single file renders anywhere.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedge {

/// One plotted series; x and y must have equal length.
struct SvgSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
  std::string color = "#1f77b4";
  bool draw_line = true;
  bool draw_markers = true;
};

/// A dashed horizontal reference line (e.g. an analytic bound).
struct SvgHLine {
  double y = 0.0;
  std::string label;
  std::string color = "#d62728";
};

/// A complete figure: series, reference lines, labels, and pixel size.
struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgSeries> series;
  std::vector<SvgHLine> hlines;
  int width = 640;
  int height = 480;
};

namespace detail {

inline std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
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

/// Rounds a positive magnitude to a 1/2/5 x 10^k tick step.
[[nodiscard]] inline double nice_step(double raw) {
  const double exponent = std::floor(std::log10(raw));
  const double base = std::pow(10.0, exponent);
  const double mantissa = raw / base;
  double nice = 10.0;
  if (mantissa <= 1.0) {
    nice = 1.0;
  } else if (mantissa <= 2.0) {
    nice = 2.0;
  } else if (mantissa <= 5.0) {
    nice = 5.0;
  }
  return nice * base;
}

inline std::string format_pixel(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

inline std::string format_tick(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

}  // namespace detail

/**
 * @brief Renders the plot as a standalone SVG document string.
 *
 * @throws std::invalid_argument if a series has mismatched x/y lengths or
 *         the pixel size is non-positive.
 */
[[nodiscard]] inline std::string render_svg(const SvgPlot& plot) {
  if (plot.width < 100 || plot.height < 100) {
    throw std::invalid_argument("render_svg: requires width, height >= 100");
  }
  for (const auto& series : plot.series) {
    if (series.x.size() != series.y.size()) {
      throw std::invalid_argument("render_svg: series '" + series.label +
                                  "' has mismatched x/y lengths");
    }
  }

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -std::numeric_limits<double>::infinity();
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const auto& series : plot.series) {
    for (std::size_t i = 0; i < series.x.size(); ++i) {
      if (std::isfinite(series.x[i]) && std::isfinite(series.y[i])) {
        x_min = std::min(x_min, series.x[i]);
        x_max = std::max(x_max, series.x[i]);
        y_min = std::min(y_min, series.y[i]);
        y_max = std::max(y_max, series.y[i]);
      }
    }
  }
  for (const auto& hline : plot.hlines) {
    if (std::isfinite(hline.y)) {
      y_min = std::min(y_min, hline.y);
      y_max = std::max(y_max, hline.y);
    }
  }
  if (!std::isfinite(x_min)) {
    x_min = 0.0;
    x_max = 1.0;
  }
  if (!std::isfinite(y_min)) {
    y_min = 0.0;
    y_max = 1.0;
  }
  if (x_min == x_max) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (y_min == y_max) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double x_pad = 0.05 * (x_max - x_min);
  const double y_pad = 0.05 * (y_max - y_min);
  x_min -= x_pad;
  x_max += x_pad;
  y_min -= y_pad;
  y_max += y_pad;

  const double margin_left = 62.0;
  const double margin_right = 18.0;
  const double margin_top = 32.0;
  const double margin_bottom = 46.0;
  const double plot_w = plot.width - margin_left - margin_right;
  const double plot_h = plot.height - margin_top - margin_bottom;
  const auto map_x = [&](double v) {
    return margin_left + (v - x_min) / (x_max - x_min) * plot_w;
  };
  const auto map_y = [&](double v) {
    return margin_top + (y_max - v) / (y_max - y_min) * plot_h;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width
      << "\" height=\"" << plot.height << "\" viewBox=\"0 0 " << plot.width
      << ' ' << plot.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes.
  out << "<line x1=\"" << detail::format_pixel(margin_left) << "\" y1=\""
      << detail::format_pixel(margin_top) << "\" x2=\""
      << detail::format_pixel(margin_left) << "\" y2=\""
      << detail::format_pixel(margin_top + plot_h)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << detail::format_pixel(margin_left) << "\" y1=\""
      << detail::format_pixel(margin_top + plot_h) << "\" x2=\""
      << detail::format_pixel(margin_left + plot_w) << "\" y2=\""
      << detail::format_pixel(margin_top + plot_h)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Ticks and grid.
  const double x_step = detail::nice_step((x_max - x_min) / 5.0);
  for (double tick = std::ceil(x_min / x_step) * x_step; tick <= x_max + 1e-9 * x_step;
       tick += x_step) {
    const double px = map_x(tick);
    out << "<line x1=\"" << detail::format_pixel(px) << "\" y1=\""
        << detail::format_pixel(margin_top + plot_h) << "\" x2=\""
        << detail::format_pixel(px) << "\" y2=\""
        << detail::format_pixel(margin_top + plot_h + 4.0)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << detail::format_pixel(px) << "\" y=\""
        << detail::format_pixel(margin_top + plot_h + 17.0)
        << "\" font-size=\"11\" text-anchor=\"middle\">"
        << detail::format_tick(tick) << "</text>\n";
  }
  const double y_step = detail::nice_step((y_max - y_min) / 5.0);
  for (double tick = std::ceil(y_min / y_step) * y_step; tick <= y_max + 1e-9 * y_step;
       tick += y_step) {
    const double py = map_y(tick);
    out << "<line x1=\"" << detail::format_pixel(margin_left - 4.0) << "\" y1=\""
        << detail::format_pixel(py) << "\" x2=\""
        << detail::format_pixel(margin_left) << "\" y2=\""
        << detail::format_pixel(py) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << detail::format_pixel(margin_left - 7.0) << "\" y=\""
        << detail::format_pixel(py + 3.5)
        << "\" font-size=\"11\" text-anchor=\"end\">" << detail::format_tick(tick)
        << "</text>\n";
  }

  // Labels and title.
  if (!plot.title.empty()) {
    out << "<text x=\"" << detail::format_pixel(margin_left + 0.5 * plot_w)
        << "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">"
        << detail::escape_xml(plot.title) << "</text>\n";
  }
  if (!plot.x_label.empty()) {
    out << "<text x=\"" << detail::format_pixel(margin_left + 0.5 * plot_w)
        << "\" y=\"" << detail::format_pixel(plot.height - 10.0)
        << "\" font-size=\"12\" text-anchor=\"middle\">"
        << detail::escape_xml(plot.x_label) << "</text>\n";
  }
  if (!plot.y_label.empty()) {
    const double cy = margin_top + 0.5 * plot_h;
    out << "<text x=\"16\" y=\"" << detail::format_pixel(cy)
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << detail::format_pixel(cy) << ")\">" << detail::escape_xml(plot.y_label)
        << "</text>\n";
  }

  // Reference lines.
  for (const auto& hline : plot.hlines) {
    const double py = map_y(hline.y);
    out << "<line x1=\"" << detail::format_pixel(margin_left) << "\" y1=\""
        << detail::format_pixel(py) << "\" x2=\""
        << detail::format_pixel(margin_left + plot_w) << "\" y2=\""
        << detail::format_pixel(py) << "\" stroke=\"" << hline.color
        << "\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    if (!hline.label.empty()) {
      out << "<text x=\"" << detail::format_pixel(margin_left + plot_w - 4.0)
          << "\" y=\"" << detail::format_pixel(py - 5.0)
          << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << hline.color
          << "\">" << detail::escape_xml(hline.label) << "</text>\n";
    }
  }

  // Series.
  for (const auto& series : plot.series) {
    if (series.draw_line && series.x.size() > 1) {
      out << "<polyline fill=\"none\" stroke=\"" << series.color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < series.x.size(); ++i) {
        out << (i == 0 ? "" : " ") << detail::format_pixel(map_x(series.x[i]))
            << ',' << detail::format_pixel(map_y(series.y[i]));
      }
      out << "\"/>\n";
    }
    if (series.draw_markers) {
      for (std::size_t i = 0; i < series.x.size(); ++i) {
        out << "<circle cx=\"" << detail::format_pixel(map_x(series.x[i]))
            << "\" cy=\"" << detail::format_pixel(map_y(series.y[i]))
            << "\" r=\"3\" fill=\"" << series.color << "\"/>\n";
      }
    }
  }

  // Legend.
  double legend_y = margin_top + 14.0;
  const double legend_x = margin_left + plot_w - 150.0;
  for (const auto& series : plot.series) {
    if (series.label.empty()) {
      continue;
    }
    out << "<line x1=\"" << detail::format_pixel(legend_x) << "\" y1=\""
        << detail::format_pixel(legend_y - 4.0) << "\" x2=\""
        << detail::format_pixel(legend_x + 22.0) << "\" y2=\""
        << detail::format_pixel(legend_y - 4.0) << "\" stroke=\"" << series.color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << detail::format_pixel(legend_x + 28.0) << "\" y=\""
        << detail::format_pixel(legend_y) << "\" font-size=\"11\">"
        << detail::escape_xml(series.label) << "</text>\n";
    legend_y += 16.0;
  }

  out << "</svg>\n";
  return out.str();
}

/**
 * @brief Renders the plot and writes it to a file.
 *
 * @throws std::runtime_error if the file cannot be opened or written.
 */
inline void save_svg(const SvgPlot& plot, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_svg: cannot open " + path);
  }
  out << render_svg(plot);
  if (!out.good()) {
    throw std::runtime_error("save_svg: write failed for " + path);
  }
}

}  // namespace wedge
