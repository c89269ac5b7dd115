#pragma once

// SVG diagrams of placements: riders, their move lines, the clockwise region
// labels and optionally shaded cells. Geometry (viewport, clipping, label
// placement, cell polygons) is exact; floats appear only in the emitted
// pixel coordinates.

#include <string>
#include <vector>

#include "riders/geometry.hpp"

namespace riders {

struct RenderSpec {
  Placement placement;
  MoveSet moves;
  double canvas = 640.0;        // pixels along the longer viewport side
  Rational margin{1, 4};        // viewport growth as a fraction of its span
  bool region_labels = true;
  bool roman_labels = false;
  bool piece_labels = true;
  std::vector<Point> shaded_cells;  // any point strictly inside each cell to shade
  std::string title;
};

struct Viewport {
  Rational xmin, ymin, xmax, ymax;
};

/// Bounding box of riders and all pairwise line crossings, grown by `margin`.
Viewport compute_viewport(const Placement& placement, const MoveSet& moves, const Rational& margin);

/// Convex polygon of the cell containing `inside`, clipped to the viewport.
std::vector<Point> cell_polygon(const Placement& placement, const MoveSet& moves, const Point& inside,
                                const Viewport& view);

/// Throws InvalidArgument for an empty placement and AttackingError for an attacking one.
std::string render_svg(const RenderSpec& spec);

std::string roman_numeral(int value);

}  // namespace riders
