#include "simnorm/quad.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "simnorm/error.hpp"
#include "simnorm/triangle.hpp"

namespace simnorm {

Quadrilateral::Quadrilateral(Point p, Point q, Point r, Point s) : vertices_{p, q, r, s} {
  for (const Point& v : vertices_) {
    if (!is_finite(v)) throw Error(ErrorCode::kInvalidPoint, "vertex coordinates must be finite");
  }
  if (p == q && q == r && r == s) {
    throw Error(ErrorCode::kDegenerateQuad, "a quadrilateral needs at least two distinct points");
  }
}

Quadrilateral apply(const SimilarityTransform& t, const Quadrilateral& q) {
  return Quadrilateral(t(q[0]), t(q[1]), t(q[2]), t(q[3]));
}

bool in_S_D(Point p, Point c, Tolerance tol) {
  const double e = tol.eps();
  const double dx = p.x - 1.0;
  const double cx = p.x - c.x;
  const double cy = p.y - c.y;
  if (p.x * p.x + p.y * p.y > 1.0 + e) return false;
  if (dx * dx + p.y * p.y > 1.0 + e) return false;
  if (cx * cx + cy * cy > 1.0 + e) return false;
  const double offset = std::fabs(p.x - 0.5);
  const double c_offset = std::fabs(c.x - 0.5);
  if (offset > c_offset + e) return false;
  if (std::fabs(offset - c_offset) <= e && std::fabs(p.y) > std::fabs(c.y) + e) return false;
  return true;
}

namespace {

struct Candidate {
  Point c;
  Point d;
};

// Order used to pick the canonical candidate: quasilexicographic on [C, D],
// then lexicographic on D among reflection variants that tie.
int compare_candidates(const Candidate& l, const Candidate& r, Tolerance tol) {
  if (int k = quasilex_compare(l.c, r.c, tol); k != 0) return k;
  if (int k = quasilex_compare(l.d, r.d, tol); k != 0) return k;
  return lex_compare(l.d, r.d, tol);
}

// Every reflection of the segment's symmetry group that carries `c` onto its
// normalized image; several apply when c sits on x = 1/2 or y = 0.
std::vector<SimilarityTransform> reflections_into_s_c(Point c, Tolerance tol) {
  const double e = tol.eps();
  std::vector<bool> flip_y, flip_x;
  if (c.y > e) {
    flip_y = {false};
  } else if (c.y < -e) {
    flip_y = {true};
  } else {
    flip_y = {false, true};
  }
  if (c.x - 0.5 > e) {
    flip_x = {false};
  } else if (c.x - 0.5 < -e) {
    flip_x = {true};
  } else {
    flip_x = {false, true};
  }
  std::vector<SimilarityTransform> out;
  for (bool fy : flip_y) {
    for (bool fx : flip_x) {
      SimilarityTransform g;
      if (fy) g = compose(SimilarityTransform::reflection_x(), g);
      if (fx) g = compose(SimilarityTransform::reflection_half(), g);
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace

QuadNormalForm normalize_quad(const Quadrilateral& q, Tolerance tol) {
  double d_max = 0.0;
  std::array<std::array<double, 4>, 4> dist{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      dist[i][j] = dist[j][i] = distance(q[i], q[j]);
      d_max = std::max(d_max, dist[i][j]);
    }
  }
  if (d_max == 0.0) {
    throw Error(ErrorCode::kDegenerateQuad, "fewer than two distinct points");
  }

  const Point origin{0.0, 0.0};
  const Point unit{1.0, 0.0};
  bool have_best = false;
  Candidate best{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      // Ordered pairs cover both endpoint-to-(A, B) assignments.
      if (i == j || dist[i][j] < (1.0 - tol.eps()) * d_max) continue;
      int rest[2];
      int n = 0;
      for (int k = 0; k < 4; ++k) {
        if (k != i && k != j) rest[n++] = k;
      }
      const SimilarityTransform place = similarity_from_segment(q[i], q[j], origin, unit, false);
      const Point p0 = place(q[rest[0]]);
      const Point p1 = place(q[rest[1]]);

      // The point with the quasilexicographically larger image becomes C;
      // on a tie either may.
      std::vector<std::pair<Point, Point>> assignments;
      const int order = quasilex_compare(p0, p1, tol);
      if (order >= 0) assignments.emplace_back(p0, p1);
      if (order <= 0) assignments.emplace_back(p1, p0);

      for (const auto& [c_raw, d_raw] : assignments) {
        for (const SimilarityTransform& g : reflections_into_s_c(c_raw, tol)) {
          const Candidate cand{g(c_raw), g(d_raw)};
          if (!have_best || compare_candidates(cand, best, tol) > 0) {
            best = cand;
            have_best = true;
          }
        }
      }
    }
  }
  // C is reported as its exact normalized image; rounding in the placement can
  // leave it 1 ulp outside the x >= 1/2 or y >= 0 half-planes.
  return {reflect_normalize(best.c), clean_zero(best.d)};
}

bool quads_similar(const Quadrilateral& q1, const Quadrilateral& q2, Tolerance tol) {
  const QuadNormalForm f1 = normalize_quad(q1, tol);
  const QuadNormalForm f2 = normalize_quad(q2, tol);
  const double e = tol.eps();
  return std::fabs(f1.c.x - f2.c.x) <= e && std::fabs(f1.c.y - f2.c.y) <= e &&
         std::fabs(f1.d.x - f2.d.x) <= e && std::fabs(f1.d.y - f2.d.y) <= e;
}

int reflection_orbit_type_count(Point c, Point d, Tolerance tol) {
  if (lex_compare(reflect_normalize(c), reflect_normalize(d), tol) != 0) {
    throw Error(ErrorCode::kPreconditionViolated,
                "orbit count needs C and D with equal normalized images");
  }
  const double e = tol.eps();
  if (std::fabs(c.x - d.x) <= e && std::fabs(c.y - d.y) <= e) return 1;
  const bool on_bisector = std::fabs(distance({0.0, 0.0}, c) - distance({1.0, 0.0}, c)) <= e;
  const bool on_axis = std::fabs(c.y) <= e;
  return (on_bisector || on_axis) ? 2 : 4;
}

}  // namespace simnorm
