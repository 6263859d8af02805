#include "simnorm/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "simnorm/error.hpp"

namespace simnorm {

Triangle::Triangle(Point p, Point q, Point r) : vertices_{p, q, r} {
  for (const Point& v : vertices_) {
    if (!is_finite(v)) throw Error(ErrorCode::kInvalidPoint, "vertex coordinates must be finite");
  }
  if (p == q && q == r) {
    throw Error(ErrorCode::kInvalidTriangle, "a triangle needs at least two distinct points");
  }
}

Triangle apply(const SimilarityTransform& t, const Triangle& tri) {
  return Triangle(t(tri[0]), t(tri[1]), t(tri[2]));
}

double heron_radicand(double a, double b, double c) {
  // Kahan's ordering keeps the factor that vanishes for collinear points exact.
  return (c + (b + a)) * (a - (c - b)) * (a + (c - b)) * (c + (b - a));
}

SideLengths SideLengths::from(double l1, double l2, double l3) {
  std::array<double, 3> s{l1, l2, l3};
  for (double v : s) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidSides, "side lengths must be finite and nonnegative");
    }
  }
  std::sort(s.begin(), s.end());
  if (s[2] == 0.0) throw Error(ErrorCode::kInvalidSides, "longest side must be positive");
  const double perimeter = s[0] + s[1] + s[2];
  const double window = 1e-12 * perimeter * perimeter * perimeter * perimeter;
  if (heron_radicand(s[0], s[1], s[2]) < -window) {
    throw Error(ErrorCode::kInvalidSides, "triangle inequality violated");
  }
  return SideLengths(s[0], s[1], s[2]);
}

double SideLengths::radicand() const { return std::max(0.0, heron_radicand(a_, b_, c_)); }

SideLengths SideLengths::normalized() const { return SideLengths(a_ / c_, b_ / c_, 1.0); }

AngleTriple AngleTriple::from(double t1, double t2, double t3, Tolerance tol) {
  std::array<double, 3> s{t1, t2, t3};
  for (double v : s) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidAngles, "angles must be finite");
  }
  std::sort(s.begin(), s.end());
  if (s[0] <= 0.0) {
    throw Error(ErrorCode::kDegenerateAngles, "smallest angle must be positive");
  }
  if (std::fabs(s[0] + s[1] + s[2] - kPi) > tol.eps()) {
    throw Error(ErrorCode::kInvalidAngles, "angles must sum to pi");
  }
  return AngleTriple(s[0], s[1], s[2]);
}

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::kAVertex: return "AVertex";
    case FormKind::kBVertex: return "BVertex";
    case FormKind::kCVertex: return "CVertex";
    case FormKind::kCircle: return "Circle";
  }
  return "?";
}

std::string_view to_string(AngleClass c) {
  switch (c) {
    case AngleClass::kAcute: return "Acute";
    case AngleClass::kRight: return "Right";
    case AngleClass::kObtuse: return "Obtuse";
    case AngleClass::kDegenerate: return "Degenerate";
  }
  return "?";
}

std::string_view to_string(SideClass c) {
  switch (c) {
    case SideClass::kEquilateral: return "Equilateral";
    case SideClass::kIsosceles: return "Isosceles";
    case SideClass::kScalene: return "Scalene";
  }
  return "?";
}

namespace {

struct Side {
  double length;
  int from;
  int to;
};

// Sides sorted ascending by length; ties keep index order.
std::array<Side, 3> sorted_sides(const Triangle& t) {
  std::array<Side, 3> sides{{{distance(t[0], t[1]), 0, 1},
                             {distance(t[1], t[2]), 1, 2},
                             {distance(t[0], t[2]), 0, 2}}};
  std::stable_sort(sides.begin(), sides.end(),
                   [](const Side& l, const Side& r) { return l.length < r.length; });
  return sides;
}

// Places side `rank` (0 shortest, 2 longest) on the unit segment of the
// x-axis and reflects the free vertex into {y >= 0, x >= 1/2}.
Point one_vertex_normal_point(const Triangle& t, int rank) {
  const Side side = sorted_sides(t)[rank];
  const int free = 3 - side.from - side.to;
  const Point origin = t[side.from];
  const Point target = t[side.to];
  const Point apex = t[free];

  // 1. Translate and rotate the side onto [0, length] of the x-axis.
  const double heading = std::atan2(target.y - origin.y, target.x - origin.x);
  SimilarityTransform g =
      compose(SimilarityTransform::rotation(-heading), SimilarityTransform::translation(-1.0 * origin));
  // 2. Free vertex above the x-axis.
  if (g(apex).y < 0.0) g = compose(SimilarityTransform::reflection_x(), g);
  // 3. Unit length.
  g = compose(SimilarityTransform::dilation(1.0 / side.length), g);
  // 4. Free vertex right of x = 1/2.
  Point p = g(apex);
  if (p.x < 0.5) {
    g = compose(SimilarityTransform::reflection_half(), g);
    p = g(apex);
  }
  // The rotation leaves ~1 ulp of noise on exactly collinear inputs.
  if (p.y < 0.0) p.y = -p.y;
  return clean_zero(p);
}

}  // namespace

SideLengths side_lengths(const Triangle& t) {
  const auto s = sorted_sides(t);
  return SideLengths::from(s[0].length, s[1].length, s[2].length);
}

Point c_normal_point(const Triangle& t) { return one_vertex_normal_point(t, 2); }

Point b_normal_point(const Triangle& t) { return one_vertex_normal_point(t, 1); }

Point a_normal_point(const Triangle& t) {
  if (sorted_sides(t)[0].length == 0.0) {
    throw Error(ErrorCode::kUnboundedType,
                "side lengths (0, c, c) have no A-normal point (point at infinity)");
  }
  return one_vertex_normal_point(t, 0);
}

Point normal_point(FormKind kind, const Triangle& t) {
  switch (kind) {
    case FormKind::kAVertex: return a_normal_point(t);
    case FormKind::kBVertex: return b_normal_point(t);
    case FormKind::kCVertex: return c_normal_point(t);
    case FormKind::kCircle: break;
  }
  throw Error(ErrorCode::kUnsupportedKind, "the circle form has no single normal point");
}

bool in_S_C(Point p, Tolerance tol) {
  const double e = tol.eps();
  return p.y >= -e && p.x >= 0.5 - e && p.x * p.x + p.y * p.y <= 1.0 + e;
}

bool in_S_B(Point p, Tolerance tol) {
  const double e = tol.eps();
  const double dx = p.x - 1.0;
  return p.y >= -e && p.x >= 0.5 - e && p.x * p.x + p.y * p.y >= 1.0 - e &&
         dx * dx + p.y * p.y <= 1.0 + e;
}

bool in_S_A(Point p, Tolerance tol) {
  const double e = tol.eps();
  const double dx = p.x - 1.0;
  return p.y >= -e && p.x >= 0.5 - e && dx * dx + p.y * p.y >= 1.0 - e;
}

bool in_domain(FormKind kind, Point p, Tolerance tol) {
  switch (kind) {
    case FormKind::kAVertex: return in_S_A(p, tol);
    case FormKind::kBVertex: return in_S_B(p, tol);
    case FormKind::kCVertex: return in_S_C(p, tol);
    case FormKind::kCircle: break;
  }
  throw Error(ErrorCode::kUnsupportedKind, "the circle form has no point domain");
}

double angle_at(Point vertex, Point p, Point q) {
  const Point u = p - vertex;
  const Point v = q - vertex;
  const double cross = u.x * v.y - u.y * v.x;
  const double dot = u.x * v.x + u.y * v.y;
  return std::atan2(std::fabs(cross), dot);
}

Triangle circle_normal_form(const AngleTriple& angles) {
  const Point c{1.0, 0.0};
  const Point b{std::cos(-2.0 * angles.alpha()), std::sin(-2.0 * angles.alpha())};
  const Point a{std::cos(2.0 * angles.beta()), std::sin(2.0 * angles.beta())};
  return Triangle(a, b, c);
}

Triangle circle_normal_form(double alpha, double beta, double gamma, Tolerance tol) {
  try {
    return circle_normal_form(AngleTriple::from(alpha, beta, gamma, tol));
  } catch (const Error& e) {
    throw Error(ErrorCode::kDegenerateAngles,
                std::string("only nondegenerate angle triples have a circle form (") + e.what() +
                    ")");
  }
}

bool is_normal_circle_triangle(const Triangle& t, Tolerance tol) {
  const double e = tol.eps();
  const Point fixed{1.0, 0.0};
  for (const Point& v : t.vertices()) {
    if (std::fabs(std::hypot(v.x, v.y) - 1.0) > e) return false;
  }
  std::optional<Point> c, a, b;
  for (const Point& v : t.vertices()) {
    if (!c && std::fabs(v.x - fixed.x) <= e && std::fabs(v.y - fixed.y) <= e) {
      c = v;
    } else if (v.y > e) {
      if (a) return false;
      a = v;
    } else if (v.y < -e) {
      if (b) return false;
      b = v;
    } else {
      return false;
    }
  }
  if (!a || !b || !c) return false;
  const double alpha = angle_at(*a, *b, *c);
  const double beta = angle_at(*b, *a, *c);
  return alpha >= -e && alpha <= kPi / 3.0 + e && alpha <= beta + e &&
         beta <= kPi / 2.0 - alpha / 2.0 + e;
}

TriangleClass classify(const Triangle& t, Tolerance tol) {
  const double e = tol.eps();
  const Point p = c_normal_point(t);
  AngleClass angle_class;
  if (p.y <= e) {
    angle_class = AngleClass::kDegenerate;
  } else {
    // Squared-radius residual against the right-angle arc (x-1/2)^2 + y^2 = 1/4.
    const double dx = p.x - 0.5;
    const double residual = dx * dx + p.y * p.y - 0.25;
    if (std::fabs(residual) <= e) {
      angle_class = AngleClass::kRight;
    } else {
      angle_class = residual < 0.0 ? AngleClass::kObtuse : AngleClass::kAcute;
    }
  }

  const SideLengths s = side_lengths(t).normalized();
  const bool ab = std::fabs(s.b() - s.a()) <= e;
  const bool bc = std::fabs(s.c() - s.b()) <= e;
  SideClass side_class = SideClass::kScalene;
  if (ab && bc) {
    side_class = SideClass::kEquilateral;
  } else if (ab || bc) {
    side_class = SideClass::kIsosceles;
  }
  return {angle_class, side_class};
}

bool triangles_similar(const Triangle& t1, const Triangle& t2, Tolerance tol) {
  const Point p = c_normal_point(t1);
  const Point q = c_normal_point(t2);
  return std::fabs(p.x - q.x) <= tol.eps() && std::fabs(p.y - q.y) <= tol.eps();
}

}  // namespace simnorm
