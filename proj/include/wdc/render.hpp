#pragma once

#include <string>
#include <string_view>

#include "wdc/configuration.hpp"

namespace wdc {

struct RenderStyle {
  bool points = true;
  bool circles = true;
  bool perspectrices = true;
  bool hagge_centres = true;
  bool pentagon = true;
  int width = 800;
  int height = 800;
  /// Viewport padding as a fraction of the larger bounding-box side.
  double margin = 0.05;
};

/// Comma-separated subset of {points, circles, perspectrices, hagge, pentagon},
/// or "all". Throws FormatError on an unknown layer name.
RenderStyle parse_layers(std::string_view list);

/// Fixed six-decimal form ("%.6f"); negative zero prints as "0.000000".
std::string format_coordinate(double value);

/// Byte-deterministic SVG. Element order: configuration circles, pentagon
/// circle, Hagge circles, perspectrix segments, points with labels.
/// Coordinates are drawn in the math frame under a y-flip.
std::string render_svg(const WoodDesarguesConfiguration& config, const DerivedFigures& derived,
                       const RenderStyle& style);

}  // namespace wdc
