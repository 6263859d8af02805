#ifndef SIMNORM_GEOMETRY_HPP_
#define SIMNORM_GEOMETRY_HPP_

#include <cmath>
#include <numbers>
#include <utility>

namespace simnorm {

inline constexpr double kPi = std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
};

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Replaces -0.0 by +0.0 so that printed canonical forms are stable.
inline Point clean_zero(Point p) { return {p.x + 0.0, p.y + 0.0}; }

// Absolute comparison threshold for unit-scale geometric predicates.
class Tolerance {
 public:
  static constexpr double kDefault = 1e-9;

  constexpr Tolerance() = default;
  // Throws Error(kInvalidTolerance) unless 0 < eps < 1e-3.
  explicit Tolerance(double eps);

  constexpr double eps() const { return eps_; }

 private:
  double eps_ = kDefault;
};

double distance(Point p, Point q);

// True when p and q are closer than tol relative to their coordinate
// magnitude (or exactly equal).
bool coincident(Point p, Point q, Tolerance tol = {});

// Element of the dilation group, stored factored as
//   p -> translation + scale * R(rotation) * F^reflect (p)
// where F is the reflection y -> -y. Reflection acts first, translation last.
class SimilarityTransform {
 public:
  SimilarityTransform() = default;
  // A negative scale is folded into a half-turn. Throws
  // Error(kInvalidTransform) for zero or non-finite parameters.
  SimilarityTransform(double scale, double rotation, bool reflect, Point translation);

  static SimilarityTransform identity() { return {}; }
  static SimilarityTransform dilation(double scale) { return {scale, 0.0, false, {}}; }
  static SimilarityTransform rotation(double radians) { return {1.0, radians, false, {}}; }
  static SimilarityTransform translation(Point offset) { return {1.0, 0.0, false, offset}; }
  // Reflection across the x-axis.
  static SimilarityTransform reflection_x() { return {1.0, 0.0, true, {}}; }
  // Reflection across the vertical line x = 1/2.
  static SimilarityTransform reflection_half() { return {1.0, kPi, true, {1.0, 0.0}}; }

  double scale() const { return scale_; }
  // Normalized to (-pi, pi].
  double rotation() const { return rotation_; }
  bool reflects() const { return reflect_; }
  Point translation() const { return translation_; }
  bool is_direct() const { return !reflect_; }

  Point operator()(Point p) const;

 private:
  double scale_ = 1.0;
  double rotation_ = 0.0;
  bool reflect_ = false;
  Point translation_{};
  double cos_ = 1.0;
  double sin_ = 0.0;
};

inline Point apply(const SimilarityTransform& t, Point p) { return t(p); }

// apply(compose(outer, inner), p) == apply(outer, apply(inner, p)).
SimilarityTransform compose(const SimilarityTransform& outer, const SimilarityTransform& inner);

// The unique similarity with p1 -> q1 and p2 -> q2; `reflect` selects the
// indirect one. Throws Error(kDegenerateSegment) if either segment collapses.
SimilarityTransform similarity_from_segment(Point p1, Point p2, Point q1, Point q2, bool reflect,
                                            Tolerance tol = {});

// Exact lexicographic order on coordinates.
constexpr bool lex_less(Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); }

// -1, 0, +1 with |a - b| <= eps counted as equal.
int compare(double a, double b, Tolerance tol);
int lex_compare(Point p, Point q, Tolerance tol);

// Image of p in {x >= 1/2, y >= 0} under the reflections across the x-axis
// and the line x = 1/2.
inline Point reflect_normalize(Point p) {
  return clean_zero({0.5 + std::fabs(p.x - 0.5), std::fabs(p.y)});
}

using PointPair = std::pair<Point, Point>;

// Quasilexicographic preorder: lexicographic order of reflect_normalize images.
bool quasilex_leq(Point p, Point q);
bool quasilex_pair_leq(const PointPair& lhs, const PointPair& rhs);

// Tolerance-aware variants: normalized images equal within tol tie.
bool quasilex_leq(Point p, Point q, Tolerance tol);
bool quasilex_pair_leq(const PointPair& lhs, const PointPair& rhs, Tolerance tol);
int quasilex_compare(Point p, Point q, Tolerance tol);

}  // namespace simnorm

#endif  // SIMNORM_GEOMETRY_HPP_
