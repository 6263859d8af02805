#ifndef SIMNORM_QUAD_HPP_
#define SIMNORM_QUAD_HPP_

#include <array>

#include "simnorm/geometry.hpp"

namespace simnorm {

// A multiset of four points with at least two distinct members (so every
// multiplicity is at most 3).
class Quadrilateral {
 public:
  // Throws Error(kInvalidPoint) for non-finite coordinates and
  // Error(kDegenerateQuad) when all four points are equal.
  Quadrilateral(Point p, Point q, Point r, Point s);

  const std::array<Point, 4>& vertices() const { return vertices_; }
  Point operator[](std::size_t i) const { return vertices_[i]; }

 private:
  std::array<Point, 4> vertices_;
};

Quadrilateral apply(const SimilarityTransform& t, const Quadrilateral& q);

// Longest-distance normal form: A = (0,0) and B = (1,0) are implicit.
struct QuadNormalForm {
  Point c;
  Point d;
};

// The admissible region S_D(c) for the fourth vertex, each inequality relaxed
// by tol.
bool in_S_D(Point p, Point c, Tolerance tol = {});

// Maps a maximum-distance pair to A, B and places the remaining two points
// so that [C, D] is maximal in the quasilexicographic pair order. Pairs whose
// length is within a relative eps of the maximum all compete.
QuadNormalForm normalize_quad(const Quadrilateral& q, Tolerance tol = {});

bool quads_similar(const Quadrilateral& q1, const Quadrilateral& q2, Tolerance tol = {});

// Number of similarity types among the reflections of d sharing the
// normalized image of c: 1, 2 or 4. Throws Error(kPreconditionViolated)
// unless reflect_normalize(c) equals reflect_normalize(d) within tol.
int reflection_orbit_type_count(Point c, Point d, Tolerance tol = {});

}  // namespace simnorm

#endif  // SIMNORM_QUAD_HPP_
