#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "fvqsd/cli.hpp"

namespace fvqsd::cli {
namespace {

std::string short_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", value);
  return buf;
}

std::string fixed(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double map(double v) const {
    const double a = log ? std::log10(v) : v;
    const double l = log ? std::log10(lo) : lo;
    const double h = log ? std::log10(hi) : hi;
    return h > l ? (a - l) / (h - l) : 0.5;
  }
};

Axis make_axis(const std::vector<const std::vector<double>*>& data, bool want_log) {
  Axis axis;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  bool positive = true;
  for (const auto* values : data) {
    for (double v : *values) {
      if (!std::isfinite(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      positive = positive && v > 0.0;
    }
  }
  if (!(lo <= hi)) return axis;
  axis.log = want_log && positive;
  if (lo == hi && axis.log) {
    lo /= 2.0;
    hi *= 2.0;
  } else if (lo == hi) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  axis.lo = lo;
  axis.hi = hi;
  return axis;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << r.experiment << ',';
    if (r.particles) out << *r.particles;
    out << ',';
    if (r.t) out << format_number(*r.t);
    out << ',' << r.x << ',' << r.y << ',' << format_number(r.estimate) << ',';
    if (r.se) out << format_number(*r.se);
    out << ',';
    if (r.bound) out << format_number(*r.bound);
    out << ',';
    if (r.replicas) out << *r.replicas;
    out << ',' << r.seed << '\n';
  }
}

void write_svg(std::ostream& out, const Plot& plot) {
  constexpr double width = 640, height = 420, left = 70, right = 160, top = 40, bottom = 50;
  const double pw = width - left - right;
  const double ph = height - top - bottom;

  std::vector<const std::vector<double>*> xs, ys;
  for (const auto& s : plot.series) {
    xs.push_back(&s.x);
    ys.push_back(&s.y);
  }
  const Axis ax = make_axis(xs, plot.log_x);
  const Axis ay = make_axis(ys, plot.log_y);
  auto px = [&](double v) { return left + ax.map(v) * pw; };
  auto py = [&](double v) { return top + (1.0 - ay.map(v)) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape(plot.title)
      << "</text>\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int k = 0; k <= 4; ++k) {
    const double f = k / 4.0;
    const double xv = ax.log ? std::pow(10.0, std::log10(ax.lo) + f * (std::log10(ax.hi) - std::log10(ax.lo)))
                             : ax.lo + f * (ax.hi - ax.lo);
    const double yv = ay.log ? std::pow(10.0, std::log10(ay.lo) + f * (std::log10(ay.hi) - std::log10(ay.lo)))
                             : ay.lo + f * (ay.hi - ay.lo);
    const double gx = left + f * pw;
    const double gy = top + (1.0 - f) * ph;
    out << "<line x1=\"" << fixed(gx) << "\" y1=\"" << top + ph << "\" x2=\"" << fixed(gx) << "\" y2=\""
        << top + ph + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed(gx) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
        << short_number(xv) << "</text>\n";
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << fixed(gy) << "\" x2=\"" << left << "\" y2=\"" << fixed(gy)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << fixed(gy + 4) << "\" text-anchor=\"end\">" << short_number(yv)
        << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">"
      << escape(plot.x_label) << (ax.log ? " (log)" : "") << "</text>\n";
  out << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << top + ph / 2 << ")\">" << escape(plot.y_label) << (ay.log ? " (log)" : "") << "</text>\n";

  for (std::size_t s = 0; s < plot.series.size(); ++s) {
    const auto& series = plot.series[s];
    const char* colour = kPalette[s % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < series.x.size() && k < series.y.size(); ++k) {
      if (!std::isfinite(series.x[k]) || !std::isfinite(series.y[k])) continue;
      if ((ax.log && series.x[k] <= 0.0) || (ay.log && series.y[k] <= 0.0)) continue;
      out << fixed(px(series.x[k])) << ',' << fixed(py(series.y[k])) << ' ';
    }
    out << "\"/>\n";
    const double ly = top + 10 + 16.0 * static_cast<double>(s);
    out << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 30 << "\" y2=\"" << ly
        << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << left + pw + 34 << "\" y=\"" << ly + 4 << "\">" << escape(series.name) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace fvqsd::cli
