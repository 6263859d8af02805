#include "simnorm/conversions.hpp"

#include <cmath>

#include "simnorm/error.hpp"

namespace simnorm {

Point normal_point_from_sides(FormKind kind, const SideLengths& s) {
  const double a = s.a(), b = s.b(), c = s.c();
  const double height = std::sqrt(s.radicand());
  // Differences of squares are factored to avoid cancellation.
  switch (kind) {
    case FormKind::kCVertex: {
      const double d = 2.0 * c * c;
      return clean_zero({((b - a) * (b + a) + c * c) / d, height / d});
    }
    case FormKind::kBVertex: {
      const double d = 2.0 * b * b;
      return clean_zero({((c - a) * (c + a) + b * b) / d, height / d});
    }
    case FormKind::kAVertex: {
      if (a == 0.0) {
        throw Error(ErrorCode::kUnboundedType,
                    "side lengths (0, c, c) have no A-normal point (point at infinity)");
      }
      const double d = 2.0 * a * a;
      return clean_zero({((c - b) * (c + b) + a * a) / d, height / d});
    }
    case FormKind::kCircle: break;
  }
  throw Error(ErrorCode::kUnsupportedKind, "the circle form has no closed-form normal point");
}

Point normal_point_from_sides(FormKind kind, double l1, double l2, double l3) {
  return normal_point_from_sides(kind, SideLengths::from(l1, l2, l3));
}

SideLengths sides_from_angles(const AngleTriple& angles) {
  // sin(gamma) taken as sin(alpha + beta): exact under the sum constraint and
  // accurate when gamma is close to pi.
  const double sa = std::sin(angles.alpha());
  const double sb = std::sin(angles.beta());
  const double sc = std::sin(angles.alpha() + angles.beta());
  return SideLengths::from(sa / sc, sb / sc, 1.0);
}

Point normal_point_from_angles(FormKind kind, const AngleTriple& angles) {
  const double sa = std::sin(angles.alpha());
  const double sb = std::sin(angles.beta());
  const double sc = std::sin(angles.alpha() + angles.beta());
  // The free vertex sits at distance (longer non-base side / base) from the
  // origin, in the direction of the angle at the origin. Going through side
  // ratios instead cancels badly when the smallest angle is tiny.
  switch (kind) {
    case FormKind::kCVertex: {
      const double r = sb / sc;
      return clean_zero({r * std::cos(angles.alpha()), r * std::sin(angles.alpha())});
    }
    case FormKind::kBVertex: {
      const double r = sc / sb;
      return clean_zero({r * std::cos(angles.alpha()), r * std::sin(angles.alpha())});
    }
    case FormKind::kAVertex: {
      const double r = sc / sa;
      return clean_zero({r * std::cos(angles.beta()), r * std::sin(angles.beta())});
    }
    case FormKind::kCircle: break;
  }
  throw Error(ErrorCode::kUnsupportedKind, "the circle form has no closed-form normal point");
}

std::optional<AngleTriple> angles_from_normal_point(FormKind kind, Point p, Tolerance tol) {
  if (!is_finite(p) || !in_domain(kind, p, tol)) {
    throw Error(ErrorCode::kOutOfDomain,
                "point is outside the domain of the " + std::string(to_string(kind)) + " form");
  }
  if (std::fabs(p.y) <= tol.eps()) return std::nullopt;
  // The base vertices sit at (0,0) and (1,0) for every one-vertex form; the
  // sorted triple does not depend on which letter each vertex carries.
  const Point origin{0.0, 0.0};
  const Point unit{1.0, 0.0};
  const double at_origin = angle_at(origin, unit, p);
  const double at_unit = angle_at(unit, origin, p);
  const double at_free = angle_at(p, origin, unit);
  return AngleTriple::from(at_origin, at_unit, at_free);
}

AngleTriple angles_from_sides(const SideLengths& s, Tolerance tol) {
  const double a = s.a(), b = s.b(), c = s.c();
  const double four_area = std::sqrt(s.radicand());
  if (a <= tol.eps() * c || four_area <= tol.eps() * c * c) {
    throw Error(ErrorCode::kDegenerate, "collinear side lengths have no angle triple");
  }
  // tan(angle opposite x) = 4 Area / (sum of the other squares - x^2).
  const double alpha = std::atan2(four_area, (b - a) * (b + a) + c * c);
  const double beta = std::atan2(four_area, (a - b) * (a + b) + c * c);
  const double gamma = std::atan2(four_area, (a - c) * (a + c) + b * b);
  return AngleTriple::from(alpha, beta, gamma);
}

}  // namespace simnorm
