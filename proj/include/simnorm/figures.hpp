#ifndef SIMNORM_FIGURES_HPP_
#define SIMNORM_FIGURES_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "simnorm/geometry.hpp"
#include "simnorm/triangle.hpp"

namespace simnorm::figures {

// Vertices emitted per declared curve.
inline constexpr int kCurveSamples = 101;

enum class CurveType { kLine, kCircle };

// A boundary curve in the coordinates of its frame. Lines satisfy
// a*x + b*y = c with params {a, b, c}; circles satisfy
// (x - cx)^2 + (y - cy)^2 = r^2 with params {cx, cy, r}.
struct Curve {
  std::string name;
  CurveType type;
  std::array<double, 3> params;
  std::vector<Point> samples;
};

struct Marker {
  std::string name;
  std::string frame;
  Point at;
};

// Figure content before rendering; exposed so tests can compare the
// declared curve set against the rendered file.
struct Figure {
  FormKind kind;
  std::vector<Curve> curves;
  std::vector<Marker> markers;
};

Figure domain_figure(FormKind kind);

// SVG 1.1 rendering of the domain of `kind`: boundary curves, the
// right-angle locus, acute/obtuse shading and the equilateral marker.
std::string domain_svg(FormKind kind);

// Overlay for a one-vertex form: the domain plus a labelled normal point.
std::string point_plot_svg(FormKind kind, Point normal_point);

// Overlay for the circle form: the normal circle triangle and its
// (alpha, beta) parameter point.
std::string circle_plot_svg(const AngleTriple& angles);

// File name used by `domains --kind all`, e.g. "domain_c.svg".
std::string domain_file_name(FormKind kind);

}  // namespace simnorm::figures

#endif  // SIMNORM_FIGURES_HPP_
