#ifndef DOODLE_SVG_HPP
#define DOODLE_SVG_HPP

#include <string>

#include "doodle/arrow_diagram.hpp"

namespace doodle {

struct SvgOptions {
  double radius = 100.0;
  double margin = 24.0;
  double stroke_width = 1.5;
  double point_radius = 3.0;
  double arrowhead_length = 10.0;
  double arrowhead_width = 7.0;
  /// Label points with their 1-based index.
  bool show_indices = true;
};

/// SVG 1.1 drawing of the diagram on the unit circle scaled to `radius`:
/// one <line class="chord"> per arrow and one <polygon class="arrowhead">
/// at its head. Output is a pure function of the inputs.
std::string render_svg(const ArrowDiagram& a, const SvgOptions& options = {});

}  // namespace doodle

#endif  // DOODLE_SVG_HPP
