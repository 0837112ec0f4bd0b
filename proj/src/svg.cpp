#include "doodle/svg.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace doodle {

namespace {

struct Point {
  double x;
  double y;
};

std::string num(double v) {
  // avoid "-0.000"
  if (std::abs(v) < 5e-4) v = 0.0;
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << v;
  return out.str();
}

}  // namespace

std::string render_svg(const ArrowDiagram& a, const SvgOptions& options) {
  const int n = a.n();
  const double size = 2.0 * (options.radius + options.margin);
  const double c = size / 2.0;

  // Position p is the point P_{p+1} at angle (p+1)pi/n + pi/(2n); SVG y grows downward.
  auto at = [&](int p) {
    const double theta = (p + 1) * std::numbers::pi / n + std::numbers::pi / (2.0 * n);
    return Point{c + options.radius * std::cos(theta), c - options.radius * std::sin(theta)};
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(size) << "\" height=\""
      << num(size) << "\" viewBox=\"0 0 " << num(size) << ' ' << num(size) << "\">\n"
      << "  <circle class=\"circle\" cx=\"" << num(c) << "\" cy=\"" << num(c) << "\" r=\"" << num(options.radius)
      << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" << num(options.stroke_width) << "\"/>\n";

  for (int p = 0; p < static_cast<int>(a.points()); ++p) {
    const int q = a.partner(p);
    if (a.role(p) != Role::Tail) continue;
    const Point tail = at(p);
    const Point head = at(q);
    const double dx = head.x - tail.x;
    const double dy = head.y - tail.y;
    const double len = std::hypot(dx, dy);
    const double ux = dx / len;
    const double uy = dy / len;
    const Point base{head.x - ux * options.arrowhead_length, head.y - uy * options.arrowhead_length};
    const double hw = options.arrowhead_width / 2.0;
    svg << "  <line class=\"chord\" x1=\"" << num(tail.x) << "\" y1=\"" << num(tail.y) << "\" x2=\"" << num(base.x)
        << "\" y2=\"" << num(base.y) << "\" stroke=\"#000000\" stroke-width=\"" << num(options.stroke_width)
        << "\"/>\n"
        << "  <polygon class=\"arrowhead\" points=\"" << num(head.x) << ',' << num(head.y) << ' '
        << num(base.x - uy * hw) << ',' << num(base.y + ux * hw) << ' ' << num(base.x + uy * hw) << ','
        << num(base.y - ux * hw) << "\" fill=\"#000000\"/>\n";
  }

  for (int p = 0; p < static_cast<int>(a.points()); ++p) {
    const Point pt = at(p);
    svg << "  <circle class=\"point\" cx=\"" << num(pt.x) << "\" cy=\"" << num(pt.y) << "\" r=\""
        << num(options.point_radius) << "\" fill=\"#000000\"/>\n";
    if (options.show_indices) {
      const int i = p + 1;
      const double theta = i * std::numbers::pi / n + std::numbers::pi / (2.0 * n);
      const double lr = options.radius + options.margin / 2.0;
      svg << "  <text class=\"index\" x=\"" << num(c + lr * std::cos(theta)) << "\" y=\""
          << num(c - lr * std::sin(theta)) << "\" font-size=\"10\" text-anchor=\"middle\" "
          << "dominant-baseline=\"middle\">" << i << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace doodle
