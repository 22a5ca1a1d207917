#include "bottomless/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace bottomless {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginX = 40.0;
constexpr double kMarginY = 40.0;

const char* kPalette[] = {
    "#808080",  // uncolored
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
};
constexpr int kPaletteSize = static_cast<int>(std::size(kPalette)) - 1;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace

int svg_max_color() { return kPaletteSize; }

std::string render_svg(const std::vector<PointRecord>& points,
                       const std::vector<int>& colors,
                       const std::optional<BottomlessRect>& rect) {
  if (!colors.empty() && colors.size() != points.size())
    throw std::invalid_argument("one color per point required");
  for (int c : colors)
    if (c < 0 || c > kPaletteSize)
      throw std::invalid_argument("color outside palette");

  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  if (!points.empty()) {
    x_min = x_max = to_double(points[0].x);
    y_min = y_max = to_double(points[0].y);
    for (const auto& p : points) {
      x_min = std::min(x_min, to_double(p.x));
      x_max = std::max(x_max, to_double(p.x));
      y_min = std::min(y_min, to_double(p.y));
      y_max = std::max(y_max, to_double(p.y));
    }
  }
  double dx = x_max - x_min, dy = y_max - y_min;
  if (dx <= 0.0) dx = 1.0;
  if (dy <= 0.0) dy = 1.0;

  auto sx = [&](double x) {
    return kMarginX + (x - x_min) / dx * (kWidth - 2 * kMarginX);
  };
  auto sy = [&](double y) {
    return kHeight - kMarginY - (y - y_min) / dy * (kHeight - 2 * kMarginY);
  };

  std::string doc;
  doc += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
  doc += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" "
         "fill=\"#ffffff\"/>\n";

  if (rect) {
    if (rect->a > rect->b)
      throw std::invalid_argument("rectangle with a > b");
    double rx0 = std::clamp(sx(to_double(rect->a)), 0.0, kWidth);
    double rx1 = std::clamp(sx(to_double(rect->b)), 0.0, kWidth);
    double ry = std::clamp(sy(to_double(rect->c)), 0.0, kHeight);
    doc += "<rect x=\"" + num(rx0) + "\" y=\"" + num(ry) + "\" width=\"" +
           num(rx1 - rx0) + "\" height=\"" + num(kHeight - ry) +
           "\" fill=\"#b0c4de\" fill-opacity=\"0.5\" stroke=\"#4363d8\" "
           "stroke-width=\"1\"/>\n";
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    int c = colors.empty() ? 0 : colors[i];
    doc += "<circle cx=\"" + num(sx(to_double(points[i].x))) + "\" cy=\"" +
           num(sy(to_double(points[i].y))) + "\" r=\"4.000\" fill=\"" +
           kPalette[c] + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }

  doc += "</svg>\n";
  return doc;
}

}  // namespace bottomless
