#ifndef SIMNORM_TRIANGLE_HPP_
#define SIMNORM_TRIANGLE_HPP_

#include <array>
#include <string_view>

#include "simnorm/geometry.hpp"

namespace simnorm {

// A multiset of three points with at least two distinct members.
class Triangle {
 public:
  // Throws Error(kInvalidPoint) for non-finite coordinates and
  // Error(kInvalidTriangle) when all three points are equal.
  Triangle(Point p, Point q, Point r);

  const std::array<Point, 3>& vertices() const { return vertices_; }
  Point operator[](std::size_t i) const { return vertices_[i]; }

 private:
  std::array<Point, 3> vertices_;
};

Triangle apply(const SimilarityTransform& t, const Triangle& tri);

// Side lengths sorted ascending: a <= b <= c, c > 0, a + b >= c up to rounding.
class SideLengths {
 public:
  // Sorts the three lengths. Throws Error(kInvalidSides) for negative or
  // non-finite values, c == 0, or a triangle inequality violation beyond
  // the rounding window -1e-12 * (a + b + c)^4 on the Heron radicand.
  static SideLengths from(double l1, double l2, double l3);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  // 16 * Area^2 = -a^4 - b^4 - c^4 + 2(a^2 b^2 + a^2 c^2 + b^2 c^2), evaluated
  // in factored form and clamped to >= 0.
  double radicand() const;
  // Lengths divided by the longest side.
  SideLengths normalized() const;

 private:
  SideLengths(double a, double b, double c) : a_(a), b_(b), c_(c) {}
  double a_, b_, c_;
};

// Factored radicand for sorted a <= b <= c, unclamped.
double heron_radicand(double a, double b, double c);

// Angles sorted ascending, nondegenerate: 0 < alpha <= beta <= gamma,
// alpha + beta + gamma = pi.
class AngleTriple {
 public:
  // Sorts the angles. Throws Error(kDegenerateAngles) if the smallest is
  // <= 0 and Error(kInvalidAngles) if the sum misses pi by more than tol or
  // a value is not finite.
  static AngleTriple from(double t1, double t2, double t3, Tolerance tol = {});

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

 private:
  AngleTriple(double alpha, double beta, double gamma)
      : alpha_(alpha), beta_(beta), gamma_(gamma) {}
  double alpha_, beta_, gamma_;
};

enum class FormKind { kAVertex, kBVertex, kCVertex, kCircle };

std::string_view to_string(FormKind kind);

enum class AngleClass { kAcute, kRight, kObtuse, kDegenerate };
enum class SideClass { kEquilateral, kIsosceles, kScalene };

std::string_view to_string(AngleClass c);
std::string_view to_string(SideClass c);

struct TriangleClass {
  AngleClass angle_class;
  SideClass side_class;

  friend bool operator==(const TriangleClass&, const TriangleClass&) = default;
};

SideLengths side_lengths(const Triangle& t);

// Longest side onto A=(0,0), B=(1,0); the free vertex lands in S_C.
Point c_normal_point(const Triangle& t);
// Median side onto A=(0,0), C=(1,0); the free vertex lands in S_B.
Point b_normal_point(const Triangle& t);
// Shortest side onto B=(0,0), C=(1,0); the free vertex lands in S_A.
// Throws Error(kUnboundedType) for the (0, c, c) type.
Point a_normal_point(const Triangle& t);
// Dispatch on kind; throws Error(kUnsupportedKind) for kCircle.
Point normal_point(FormKind kind, const Triangle& t);

bool in_S_C(Point p, Tolerance tol = {});
bool in_S_B(Point p, Tolerance tol = {});
bool in_S_A(Point p, Tolerance tol = {});
bool in_domain(FormKind kind, Point p, Tolerance tol = {});

// Vertices returned in the order (A, B, C): C = (1,0), B at polar angle
// -2 alpha, A at polar angle 2 beta on the unit circle.
Triangle circle_normal_form(const AngleTriple& angles);
// Validates the raw angles first; Error(kDegenerateAngles) on any violation.
Triangle circle_normal_form(double alpha, double beta, double gamma, Tolerance tol = {});

bool is_normal_circle_triangle(const Triangle& t, Tolerance tol = {});

TriangleClass classify(const Triangle& t, Tolerance tol = {});

bool triangles_similar(const Triangle& t1, const Triangle& t2, Tolerance tol = {});

// Interior angle at `vertex` of the triangle (vertex, p, q), in [0, pi].
double angle_at(Point vertex, Point p, Point q);

}  // namespace simnorm

#endif  // SIMNORM_TRIANGLE_HPP_
