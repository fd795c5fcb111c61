#pragma once

#include <string>
#include <vector>

namespace acre {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct SvgStyle {
  std::string title;
  std::string x_label = "x";
  std::string y_label = "y";
  int width = 640;
  int height = 400;
};

/// Standalone SVG with one polyline per series, axis ticks and a legend in
/// input order. Non-finite points are dropped and counted in a comment.
std::string emit_svg(const std::vector<Series>& series, const SvgStyle& style = {});

}  // namespace acre
