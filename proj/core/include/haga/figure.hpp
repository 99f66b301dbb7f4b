#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "haga/config.hpp"

namespace haga {

struct FigureSpec {
  Rat d;
  Rat e;
  bool draw_square = true;
  bool draw_crease = true;
  bool draw_triangle = true;
  std::vector<std::string> circles;  // names from kCircleNames
};

/// A stored (d, e, circles) choice whose case matches one of the reference
/// figures. The parameters are approximations chosen per case, not measured.
struct FigurePreset {
  std::string name;
  int figure_number = 0;
  std::string caption;
  FigureSpec spec;
};

const std::vector<FigurePreset>& figure_presets();

/// Lookup by name ("h5", "abc-h1", ...) or by figure number ("9").
/// Throws GeometryError(UnknownPreset).
const FigurePreset& find_preset(std::string_view key);

/// Axis-aligned box in SVG user units (y grows downwards).
struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool overlaps(const Box& o) const { return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1; }
};

struct PlacedLabel {
  std::string text;
  double anchor_x = 0;
  double anchor_y = 0;
  Box box;
};

struct RenderedFigure {
  std::string svg;
  double width = 0;
  double height = 0;
  std::vector<PlacedLabel> labels;
};

inline constexpr double kFigureHeight = 600.0;
inline constexpr double kLabelFontSize = 16.0;

/// Deterministic SVG 1.1: square, crease, triangle AEF, circles in
/// ascending name order, labels last. Throws UnknownCircle for a bad name
/// and NoF when circles other than delta are requested in case h2.
RenderedFigure render_figure(const FigureSpec& spec);

}  // namespace haga
