#include "acre/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "acre/errors.hpp"

namespace acre {
namespace {

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

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

// Round step of the form {1, 2, 5} x 10^k giving about five ticks.
double tick_step(double span) {
  const double raw = span / 5.0;
  const double p = std::pow(10.0, std::floor(std::log10(raw)));
  const double m = raw / p;
  return (m < 1.5 ? 1.0 : m < 3.5 ? 2.0 : m < 7.5 ? 5.0 : 10.0) * p;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string emit_svg(const std::vector<Series>& series, const SvgStyle& style) {
  if (series.empty()) throw DomainError("emit_svg needs at least one series");
  std::size_t dropped = 0;
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw DomainError("series x and y lengths differ");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        ++dropped;
        continue;
      }
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (!(x0 <= x1)) x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  if (x0 == x1) x0 -= 0.5, x1 += 0.5;
  if (y0 == y1) y0 -= 0.5, y1 += 0.5;

  const double W = style.width, H = style.height;
  const double left = 60, right = 20, top = 30, bottom = 45;
  const double pw = W - left - right, ph = H - top - bottom;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << style.width << ' '
     << style.height << "\" width=\"" << style.width << "\" height=\"" << style.height << "\">\n";
  if (dropped > 0) os << "<!-- dropped " << dropped << " non-finite points -->\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
     << "\" fill=\"white\"/>\n";
  if (!style.title.empty()) {
    os << "<text x=\"" << fixed(W / 2) << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(style.title) << "</text>\n";
  }
  os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  os << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + ph) << "\" x2=\"" << fixed(left + pw)
     << "\" y2=\"" << fixed(top + ph) << "\"/>\n";
  os << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left)
     << "\" y2=\"" << fixed(top + ph) << "\"/>\n";
  os << "</g>\n<g font-size=\"11\">\n";
  const double sx = tick_step(x1 - x0);
  for (double t = std::ceil(x0 / sx) * sx; t <= x1 + 1e-9 * sx; t += sx) {
    os << "<line x1=\"" << fixed(px(t)) << "\" y1=\"" << fixed(top + ph) << "\" x2=\"" << fixed(px(t))
       << "\" y2=\"" << fixed(top + ph + 5) << "\" stroke=\"black\"/>";
    os << "<text x=\"" << fixed(px(t)) << "\" y=\"" << fixed(top + ph + 18)
       << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  const double sy = tick_step(y1 - y0);
  for (double t = std::ceil(y0 / sy) * sy; t <= y1 + 1e-9 * sy; t += sy) {
    os << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(py(t)) << "\" x2=\"" << fixed(left)
       << "\" y2=\"" << fixed(py(t)) << "\" stroke=\"black\"/>";
    os << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(py(t) + 4)
       << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
  os << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"" << fixed(H - 8)
     << "\" text-anchor=\"middle\">" << escape(style.x_label) << "</text>\n";
  os << "<text x=\"14\" y=\"" << fixed(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
     << fixed(top + ph / 2) << ")\">" << escape(style.y_label) << "</text>\n";
  os << "</g>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kColors[k % (sizeof kColors / sizeof kColors[0])];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!first) os << ' ';
      os << fixed(px(s.x[i])) << ',' << fixed(py(s.y[i]));
      first = false;
    }
    os << "\"/>\n";
    const double ly = top + 10 + 16 * k;
    os << "<line x1=\"" << fixed(left + pw - 120) << "\" y1=\"" << fixed(ly) << "\" x2=\""
       << fixed(left + pw - 100) << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>";
    os << "<text x=\"" << fixed(left + pw - 95) << "\" y=\"" << fixed(ly + 4) << "\" font-size=\"11\">"
       << escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace acre
