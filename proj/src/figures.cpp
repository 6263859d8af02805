#include "simnorm/figures.hpp"

#include <cmath>
#include <cstdio>
#include <string_view>

#include "simnorm/error.hpp"

namespace simnorm::figures {

namespace {

const double kSqrt3Half = std::sqrt(3.0) / 2.0;

// Fixed-precision number formatting; the output bytes must not depend on
// locale or on the shortest-representation algorithm of the library.
std::string num(double v, int decimals = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v + 0.0);
  return buf;
}

std::string points_attr(const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(pts[i].x) + "," + num(pts[i].y);
  }
  return out;
}

Curve arc(std::string name, Point center, double r, double t0, double t1) {
  Curve c{std::move(name), CurveType::kCircle, {center.x, center.y, r}, {}};
  for (int i = 0; i < kCurveSamples; ++i) {
    const double t = t0 + (t1 - t0) * i / (kCurveSamples - 1);
    c.samples.push_back({center.x + r * std::cos(t), center.y + r * std::sin(t)});
  }
  return c;
}

Curve segment(std::string name, Point p0, Point p1, std::array<double, 3> line) {
  Curve c{std::move(name), CurveType::kLine, line, {}};
  for (int i = 0; i < kCurveSamples; ++i) {
    const double t = static_cast<double>(i) / (kCurveSamples - 1);
    c.samples.push_back({p0.x + t * (p1.x - p0.x), p0.y + t * (p1.y - p0.y)});
  }
  return c;
}

std::vector<Point> arc_points(Point center, double r, double t0, double t1, int n = 48) {
  std::vector<Point> out;
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + (t1 - t0) * i / n;
    out.push_back({center.x + r * std::cos(t), center.y + r * std::sin(t)});
  }
  return out;
}

void append(std::vector<Point>& dst, const std::vector<Point>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

struct Region {
  std::string name;  // "acute" or "obtuse"
  std::vector<Point> outline;
};

// Maps a math-coordinate window onto a pixel rectangle.
struct Frame {
  std::string id;
  double xmin, xmax, ymin, ymax;
  double left, top;  // pixel position of the (xmin, ymax) corner
  double scale;      // pixels per unit

  double px(double x) const { return left + scale * (x - xmin); }
  double py(double y) const { return top + scale * (ymax - y); }
  double width() const { return scale * (xmax - xmin); }
  double height() const { return scale * (ymax - ymin); }
};

struct Layout {
  std::string title;
  std::string legend;
  std::vector<Frame> frames;
  std::vector<std::pair<std::string, Region>> regions;  // frame id, region
  std::vector<std::pair<std::string, Curve>> curves;    // frame id, curve
  std::vector<std::pair<std::string, std::vector<Point>>> shapes;  // frame id, closed polygon
};

const Frame& frame_by_id(const Layout& layout, std::string_view id) {
  for (const Frame& f : layout.frames) {
    if (f.id == id) return f;
  }
  return layout.frames.front();
}

struct Label {
  std::string frame;
  Point at;
  std::string text;
};

std::string render(const Layout& layout, const std::vector<Marker>& markers,
                   const std::vector<Label>& labels) {
  double width = 0.0, height = 0.0;
  for (const Frame& f : layout.frames) {
    width = std::max(width, f.left + f.width() + 40.0);
    height = std::max(height, f.top + f.height() + 60.0);
  }
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width, 0) +
       "\" height=\"" + num(height, 0) + "\" viewBox=\"0 0 " + num(width, 0) + " " +
       num(height, 0) + "\">\n";
  s += "<title>" + layout.title + "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(width, 0) + "\" height=\"" + num(height, 0) +
       "\" fill=\"#ffffff\"/>\n";
  s += "<defs>\n";
  for (const Frame& f : layout.frames) {
    s += "<clipPath id=\"clip-" + f.id + "\"><rect x=\"" + num(f.xmin, 6) + "\" y=\"" +
         num(f.ymin, 6) + "\" width=\"" + num(f.xmax - f.xmin, 6) + "\" height=\"" +
         num(f.ymax - f.ymin, 6) + "\"/></clipPath>\n";
  }
  s += "</defs>\n";

  for (const Frame& f : layout.frames) {
    const double stroke = 1.5 / f.scale;
    s += "<g id=\"frame-" + f.id + "\" data-frame=\"" + f.id + "\" data-window=\"" +
         num(f.xmin, 6) + " " + num(f.xmax, 6) + " " + num(f.ymin, 6) + " " + num(f.ymax, 6) +
         "\" transform=\"matrix(" + num(f.scale, 6) + " 0 0 " + num(-f.scale, 6) + " " +
         num(f.left - f.scale * f.xmin, 6) + " " + num(f.top + f.scale * f.ymax, 6) +
         ")\" clip-path=\"url(#clip-" + f.id + ")\">\n";
    // Axes.
    s += "<line class=\"axis\" x1=\"" + num(f.xmin, 6) + "\" y1=\"0\" x2=\"" + num(f.xmax, 6) +
         "\" y2=\"0\" stroke=\"#999999\" stroke-width=\"" + num(stroke / 2, 6) + "\"/>\n";
    s += "<line class=\"axis\" x1=\"0\" y1=\"" + num(f.ymin, 6) + "\" x2=\"0\" y2=\"" +
         num(f.ymax, 6) + "\" stroke=\"#999999\" stroke-width=\"" + num(stroke / 2, 6) + "\"/>\n";
    for (const auto& [fid, region] : layout.regions) {
      if (fid != f.id) continue;
      const char* fill = region.name == "acute" ? "#cfe3f7" : "#f7d9cf";
      s += "<polygon class=\"region\" data-region=\"" + region.name + "\" fill=\"" + fill +
           "\" stroke=\"none\" points=\"" + points_attr(region.outline) + "\"/>\n";
    }
    for (const auto& [fid, shape] : layout.shapes) {
      if (fid != f.id) continue;
      s += "<polygon class=\"shape\" fill=\"none\" stroke=\"#2a7f2a\" stroke-width=\"" +
           num(stroke, 6) + "\" points=\"" + points_attr(shape) + "\"/>\n";
    }
    for (const auto& [fid, curve] : layout.curves) {
      if (fid != f.id) continue;
      const bool locus = curve.name.rfind("right-", 0) == 0;
      s += "<polyline class=\"curve\" data-name=\"" + curve.name + "\" data-curve=\"" +
           (curve.type == CurveType::kLine ? "line" : "circle") + "\" data-params=\"" +
           num(curve.params[0], 17) + " " + num(curve.params[1], 17) + " " +
           num(curve.params[2], 17) + "\" fill=\"none\" stroke=\"" +
           (locus ? "#c03030" : "#000000") + "\" stroke-width=\"" + num(stroke, 6) + "\"" +
           (locus ? " stroke-dasharray=\"" + num(4 * stroke, 6) + " " + num(2 * stroke, 6) + "\""
                  : std::string()) +
           " points=\"" + points_attr(curve.samples) + "\"/>\n";
    }
    for (const Marker& m : markers) {
      if (m.frame != f.id) continue;
      s += "<circle class=\"marker\" data-name=\"" + m.name + "\" cx=\"" + num(m.at.x) +
           "\" cy=\"" + num(m.at.y) + "\" r=\"" + num(4.0 / f.scale, 6) +
           "\" fill=\"#202020\"/>\n";
    }
    s += "</g>\n";
    // Frame border in pixel coordinates.
    s += "<rect class=\"frame\" x=\"" + num(f.left, 3) + "\" y=\"" + num(f.top, 3) +
         "\" width=\"" + num(f.width(), 3) + "\" height=\"" + num(f.height(), 3) +
         "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  }
  for (const Label& l : labels) {
    const Frame& f = frame_by_id(layout, l.frame);
    s += "<text x=\"" + num(f.px(l.at.x) + 6.0, 3) + "\" y=\"" + num(f.py(l.at.y) - 6.0, 3) +
         "\" font-family=\"sans-serif\" font-size=\"12\">" + l.text + "</text>\n";
  }
  const Frame& first = layout.frames.front();
  s += "<text class=\"legend\" x=\"" + num(first.left, 3) + "\" y=\"" +
       num(first.top + first.height() + 24.0, 3) +
       "\" font-family=\"sans-serif\" font-size=\"12\">" + layout.legend + "</text>\n";
  s += "</svg>\n";
  return s;
}

Layout one_vertex_layout(FormKind kind) {
  const Point origin{0.0, 0.0};
  const Point unit{1.0, 0.0};
  const Point equilateral{0.5, kSqrt3Half};
  Layout l;
  const std::string fid = "main";
  switch (kind) {
    case FormKind::kCVertex: {
      l.title = "C-vertex normal form: domain S_C";
      l.legend = "S_C: y >= 0, x >= 1/2, x^2 + y^2 <= 1. Dashed: right triangles (R_C); "
                 "blue acute, red obtuse.";
      l.frames.push_back({fid, -0.1, 1.1, -0.1, 1.1, 40.0, 40.0, 400.0});
      l.curves.emplace_back(fid, segment("y=0", {0.5, 0.0}, unit, {0.0, 1.0, 0.0}));
      l.curves.emplace_back(fid, segment("x=1/2", {0.5, 0.0}, equilateral, {1.0, 0.0, 0.5}));
      l.curves.emplace_back(fid, arc("x^2+y^2=1", origin, 1.0, 0.0, kPi / 3.0));
      l.curves.emplace_back(fid, arc("right-R_C", {0.5, 0.0}, 0.5, 0.0, kPi / 2.0));
      Region acute{"acute", arc_points({0.5, 0.0}, 0.5, 0.0, kPi / 2.0)};
      acute.outline.push_back(equilateral);
      append(acute.outline, arc_points(origin, 1.0, kPi / 3.0, 0.0));
      Region obtuse{"obtuse", arc_points({0.5, 0.0}, 0.5, 0.0, kPi / 2.0)};
      obtuse.outline.push_back({0.5, 0.0});
      l.regions.emplace_back(fid, acute);
      l.regions.emplace_back(fid, obtuse);
      break;
    }
    case FormKind::kBVertex: {
      l.title = "B-vertex normal form: domain S_B";
      l.legend = "S_B: y >= 0, x >= 1/2, x^2 + y^2 >= 1, (x-1)^2 + y^2 <= 1. Dashed: right "
                 "triangles (R_B, x = 1); blue acute, red obtuse.";
      l.frames.push_back({fid, -0.1, 2.1, -0.1, 1.2, 40.0, 40.0, 300.0});
      l.curves.emplace_back(fid, segment("y=0", unit, {2.0, 0.0}, {0.0, 1.0, 0.0}));
      l.curves.emplace_back(fid, arc("x^2+y^2=1", origin, 1.0, 0.0, kPi / 3.0));
      l.curves.emplace_back(fid, arc("(x-1)^2+y^2=1", unit, 1.0, 0.0, 2.0 * kPi / 3.0));
      l.curves.emplace_back(fid, segment("right-R_B", unit, {1.0, 1.0}, {1.0, 0.0, 1.0}));
      Region acute{"acute", arc_points(origin, 1.0, 0.0, kPi / 3.0)};
      append(acute.outline, arc_points(unit, 1.0, 2.0 * kPi / 3.0, kPi / 2.0));
      Region obtuse{"obtuse", arc_points(unit, 1.0, kPi / 2.0, 0.0)};
      obtuse.outline.push_back(unit);
      l.regions.emplace_back(fid, acute);
      l.regions.emplace_back(fid, obtuse);
      break;
    }
    case FormKind::kAVertex: {
      l.title = "A-vertex normal form: domain S_A";
      l.legend = "S_A: y >= 0, x >= 1/2, (x-1)^2 + y^2 >= 1 (unbounded; clipped to [0,3] x "
                 "[0,3]). Dashed: right triangles (R_A, x = 1); blue acute, red obtuse.";
      l.frames.push_back({fid, 0.0, 3.0, 0.0, 3.0, 40.0, 40.0, 160.0});
      l.curves.emplace_back(fid, segment("y=0", {2.0, 0.0}, {3.0, 0.0}, {0.0, 1.0, 0.0}));
      l.curves.emplace_back(fid, arc("(x-1)^2+y^2=1", unit, 1.0, 0.0, 2.0 * kPi / 3.0));
      l.curves.emplace_back(fid, segment("x=1/2", equilateral, {0.5, 3.0}, {1.0, 0.0, 0.5}));
      l.curves.emplace_back(fid, segment("right-R_A", {1.0, 1.0}, {1.0, 3.0}, {1.0, 0.0, 1.0}));
      Region acute{"acute", {equilateral, {0.5, 3.0}, {1.0, 3.0}, {1.0, 1.0}}};
      append(acute.outline, arc_points(unit, 1.0, kPi / 2.0, 2.0 * kPi / 3.0));
      Region obtuse{"obtuse", {{1.0, 1.0}, {1.0, 3.0}, {3.0, 3.0}, {3.0, 0.0}, {2.0, 0.0}}};
      append(obtuse.outline, arc_points(unit, 1.0, 0.0, kPi / 2.0));
      l.regions.emplace_back(fid, acute);
      l.regions.emplace_back(fid, obtuse);
      break;
    }
    case FormKind::kCircle:
      break;
  }
  return l;
}

Layout circle_layout() {
  Layout l;
  l.title = "Circle normal form: unit circle and the (alpha, beta) parameter domain";
  l.legend = "Left: C = (1,0), B below and A above the x-axis. Right: 0 < alpha, alpha <= "
             "beta <= pi/2 - alpha/2; dashed: right triangles (alpha + beta = pi/2).";
  l.frames.push_back({"main", -1.2, 1.2, -1.2, 1.2, 40.0, 40.0, 180.0});
  l.frames.push_back({"params", -0.1, 1.2, -0.1, 1.7, 520.0, 40.0, 240.0});
  l.curves.emplace_back("main", arc("x^2+y^2=1", {0.0, 0.0}, 1.0, 0.0, 2.0 * kPi));
  const Point apex{kPi / 3.0, kPi / 3.0};
  const Point top{0.0, kPi / 2.0};
  const Point corner{kPi / 4.0, kPi / 4.0};
  l.curves.emplace_back("params", segment("alpha=0", {0.0, 0.0}, top, {1.0, 0.0, 0.0}));
  l.curves.emplace_back("params", segment("beta=alpha", {0.0, 0.0}, apex, {-1.0, 1.0, 0.0}));
  l.curves.emplace_back("params",
                        segment("beta=pi/2-alpha/2", top, apex, {0.5, 1.0, kPi / 2.0}));
  l.curves.emplace_back("params",
                        segment("right-alpha+beta=pi/2", top, corner, {1.0, 1.0, kPi / 2.0}));
  l.regions.emplace_back("params", Region{"obtuse", {{0.0, 0.0}, corner, top}});
  l.regions.emplace_back("params", Region{"acute", {corner, apex, top}});
  return l;
}

std::vector<Marker> equilateral_markers(FormKind kind) {
  if (kind == FormKind::kCircle) {
    return {{"C", "main", {1.0, 0.0}}, {"equilateral", "params", {kPi / 3.0, kPi / 3.0}}};
  }
  return {{"equilateral", "main", {0.5, kSqrt3Half}}};
}

Layout layout_for(FormKind kind) {
  return kind == FormKind::kCircle ? circle_layout() : one_vertex_layout(kind);
}

}  // namespace

Figure domain_figure(FormKind kind) {
  Layout l = layout_for(kind);
  Figure f{kind, {}, equilateral_markers(kind)};
  for (auto& [fid, curve] : l.curves) f.curves.push_back(std::move(curve));
  return f;
}

std::string domain_svg(FormKind kind) {
  return render(layout_for(kind), equilateral_markers(kind), {});
}

std::string point_plot_svg(FormKind kind, Point normal_point) {
  if (kind == FormKind::kCircle) {
    throw Error(ErrorCode::kUnsupportedKind, "use circle_plot_svg for the circle form");
  }
  Layout l = layout_for(kind);
  std::vector<Marker> markers = equilateral_markers(kind);
  markers.push_back({"normal-point", "main", normal_point});
  std::vector<Label> labels{
      {"main", normal_point, "(" + num(normal_point.x, 6) + ", " + num(normal_point.y, 6) + ")"}};
  l.title += " with normal point";
  return render(l, markers, labels);
}

std::string circle_plot_svg(const AngleTriple& angles) {
  Layout l = circle_layout();
  const Triangle t = circle_normal_form(angles);
  l.shapes.emplace_back("main", std::vector<Point>{t[0], t[1], t[2]});
  std::vector<Marker> markers = equilateral_markers(FormKind::kCircle);
  markers.push_back({"A", "main", t[0]});
  markers.push_back({"B", "main", t[1]});
  const Point param{angles.alpha(), angles.beta()};
  markers.push_back({"normal-point", "params", param});
  std::vector<Label> labels{
      {"main", t[0], "A"},
      {"main", t[1], "B"},
      {"main", t[2], "C"},
      {"params", param, "(" + num(param.x, 6) + ", " + num(param.y, 6) + ")"}};
  l.title += " with normal triangle";
  return render(l, markers, labels);
}

std::string domain_file_name(FormKind kind) {
  switch (kind) {
    case FormKind::kAVertex: return "domain_a.svg";
    case FormKind::kBVertex: return "domain_b.svg";
    case FormKind::kCVertex: return "domain_c.svg";
    case FormKind::kCircle: return "domain_circle.svg";
  }
  return "domain.svg";
}

}  // namespace simnorm::figures
