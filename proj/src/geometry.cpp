#include "simnorm/geometry.hpp"

#include <algorithm>

#include "simnorm/error.hpp"

namespace simnorm {

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps > 0.0) || !(eps < 1e-3)) {
    throw Error(ErrorCode::kInvalidTolerance,
                "eps must satisfy 0 < eps < 1e-3, got " + std::to_string(eps));
  }
}

double distance(Point p, Point q) { return std::hypot(q.x - p.x, q.y - p.y); }

bool coincident(Point p, Point q, Tolerance tol) {
  if (p == q) return true;
  const double magnitude =
      std::max({std::fabs(p.x), std::fabs(p.y), std::fabs(q.x), std::fabs(q.y)});
  return distance(p, q) <= tol.eps() * magnitude;
}

namespace {

double normalize_angle(double radians) {
  double r = std::remainder(radians, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace

SimilarityTransform::SimilarityTransform(double scale, double rotation, bool reflect,
                                         Point translation)
    : scale_(scale), rotation_(rotation), reflect_(reflect), translation_(translation) {
  if (!std::isfinite(scale) || scale == 0.0 || !std::isfinite(rotation) ||
      !is_finite(translation)) {
    throw Error(ErrorCode::kInvalidTransform, "scale must be finite and nonzero");
  }
  if (scale_ < 0.0) {
    scale_ = -scale_;
    rotation_ += kPi;
  }
  rotation_ = normalize_angle(rotation_);
  cos_ = std::cos(rotation_);
  sin_ = std::sin(rotation_);
  // Exact quarter turns keep axis-aligned inputs exact.
  if (rotation_ == 0.0) {
    cos_ = 1.0, sin_ = 0.0;
  } else if (rotation_ == kPi) {
    cos_ = -1.0, sin_ = 0.0;
  } else if (rotation_ == kPi / 2) {
    cos_ = 0.0, sin_ = 1.0;
  } else if (rotation_ == -kPi / 2) {
    cos_ = 0.0, sin_ = -1.0;
  }
}

Point SimilarityTransform::operator()(Point p) const {
  const double y = reflect_ ? -p.y : p.y;
  return {translation_.x + scale_ * (cos_ * p.x - sin_ * y),
          translation_.y + scale_ * (sin_ * p.x + cos_ * y)};
}

SimilarityTransform compose(const SimilarityTransform& outer, const SimilarityTransform& inner) {
  // R(a) F R(b) = R(a - b) F, so the inner rotation flips sign when the
  // outer transform reflects.
  const double rotation =
      outer.rotation() + (outer.reflects() ? -inner.rotation() : inner.rotation());
  return SimilarityTransform(outer.scale() * inner.scale(), rotation,
                             outer.reflects() != inner.reflects(),
                             outer(inner.translation()));
}

SimilarityTransform similarity_from_segment(Point p1, Point p2, Point q1, Point q2, bool reflect,
                                            Tolerance tol) {
  if (coincident(p1, p2, tol) || coincident(q1, q2, tol)) {
    throw Error(ErrorCode::kDegenerateSegment, "segment endpoints coincide");
  }
  Point u = p2 - p1;
  if (reflect) u.y = -u.y;
  const Point v = q2 - q1;
  const double scale = std::hypot(v.x, v.y) / std::hypot(u.x, u.y);
  const double rotation = std::atan2(v.y, v.x) - std::atan2(u.y, u.x);
  const SimilarityTransform linear(scale, rotation, reflect, {});
  return SimilarityTransform(scale, rotation, reflect, q1 - linear(p1));
}

int compare(double a, double b, Tolerance tol) {
  if (std::fabs(a - b) <= tol.eps()) return 0;
  return a < b ? -1 : 1;
}

int lex_compare(Point p, Point q, Tolerance tol) {
  const int cx = compare(p.x, q.x, tol);
  return cx != 0 ? cx : compare(p.y, q.y, tol);
}

bool quasilex_leq(Point p, Point q) {
  const Point ps = reflect_normalize(p);
  const Point qs = reflect_normalize(q);
  return lex_less(ps, qs) || ps == qs;
}

bool quasilex_pair_leq(const PointPair& lhs, const PointPair& rhs) {
  const Point ps = reflect_normalize(lhs.first);
  const Point qs = reflect_normalize(rhs.first);
  return lex_less(ps, qs) || (ps == qs && quasilex_leq(lhs.second, rhs.second));
}

int quasilex_compare(Point p, Point q, Tolerance tol) {
  return lex_compare(reflect_normalize(p), reflect_normalize(q), tol);
}

bool quasilex_leq(Point p, Point q, Tolerance tol) { return quasilex_compare(p, q, tol) <= 0; }

bool quasilex_pair_leq(const PointPair& lhs, const PointPair& rhs, Tolerance tol) {
  const int first = quasilex_compare(lhs.first, rhs.first, tol);
  return first < 0 || (first == 0 && quasilex_leq(lhs.second, rhs.second, tol));
}

}  // namespace simnorm
