// Test-only generators and oracles. The oracles here avoid the library's
// placement code paths: they use std::complex arithmetic, acos-based angle
// measurement and exhaustive enumeration.
#ifndef SIMNORM_TESTS_SUPPORT_HPP_
#define SIMNORM_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "simnorm/geometry.hpp"
#include "simnorm/quad.hpp"
#include "simnorm/triangle.hpp"

namespace simnorm::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Point random_point(Rng& rng, double extent = 1.0) {
  return {uniform(rng, -extent, extent), uniform(rng, -extent, extent)};
}

// Random dilation-group element; scale log-uniform in [min_scale, max_scale].
inline SimilarityTransform random_transform(Rng& rng, double min_scale = 1e-3,
                                            double max_scale = 1e3, bool allow_reflect = true) {
  const double scale = std::exp(uniform(rng, std::log(min_scale), std::log(max_scale)));
  const bool reflect = allow_reflect && (rng() & 1u);
  return SimilarityTransform(scale, uniform(rng, -kPi, kPi), reflect, random_point(rng, 10.0));
}

// Collinear triangle whose side lengths are exactly representable: integer
// offsets along an axis or along a 3-4-5 direction, so the sorted lengths
// obey a + b == c bit-for-bit.
inline Triangle exact_collinear_triangle(Rng& rng) {
  const Point base{static_cast<double>(static_cast<int>(rng() % 21) - 10),
                   static_cast<double>(static_cast<int>(rng() % 21) - 10)};
  static const std::array<Point, 6> dirs{{{1, 0}, {0, 1}, {3, 4}, {-4, 3}, {5, 12}, {-1, 0}}};
  const Point dir = dirs[rng() % dirs.size()];
  std::array<int, 3> t{};
  do {
    for (int& v : t) v = static_cast<int>(rng() % 31) - 15;
  } while (t[0] == t[1] && t[1] == t[2]);
  auto at = [&](int k) { return base + static_cast<double>(k) * dir; };
  return Triangle(at(t[0]), at(t[1]), at(t[2]));
}

inline Triangle repeated_vertex_triangle(Rng& rng) {
  const Point p = random_point(rng);
  Point q = random_point(rng);
  while (q == p) q = random_point(rng);
  switch (rng() % 3) {
    case 0: return Triangle(p, p, q);
    case 1: return Triangle(p, q, p);
    default: return Triangle(q, p, p);
  }
}

// Mixture: mostly generic, ~10% exactly collinear, ~5% with a repeated vertex.
inline Triangle random_triangle(Rng& rng) {
  const auto roll = rng() % 100;
  if (roll < 10) return exact_collinear_triangle(rng);
  if (roll < 15) return repeated_vertex_triangle(rng);
  return Triangle(random_point(rng), random_point(rng), random_point(rng));
}

inline bool is_zero_c_c(const Triangle& t) {
  return t[0] == t[1] || t[1] == t[2] || t[0] == t[2];
}

// --- Oracles -------------------------------------------------------------

using Complex = std::complex<double>;

inline Complex as_complex(Point p) { return {p.x, p.y}; }

// Normal point by enumeration: every ordered choice of base (P, Q) among the
// sides of the requested rank, both orientations of the free vertex via
// complex division; keep the candidate in {y >= 0, x >= 1/2}.
inline Point oracle_normal_point(const Triangle& t, int rank) {
  std::array<double, 3> lengths{distance(t[0], t[1]), distance(t[1], t[2]),
                                distance(t[0], t[2])};
  std::array<double, 3> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  const double wanted = sorted[rank];
  std::optional<Point> best;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      if (distance(t[i], t[j]) != wanted) continue;
      const Complex z = (as_complex(t[k]) - as_complex(t[i])) /
                        (as_complex(t[j]) - as_complex(t[i]));
      for (const Complex w : {z, std::conj(z)}) {
        const Point p{w.real(), w.imag()};
        if (p.y >= -1e-12 && p.x >= 0.5 - 1e-12) {
          if (!best || p.x > best->x) best = p;
        }
      }
    }
  }
  return {best->x, std::fabs(best->y)};
}

// Interior angle via the law of cosines on coordinates.
inline double oracle_angle(Point vertex, Point p, Point q) {
  const double a2 = std::pow(distance(p, q), 2);
  const double b2 = std::pow(distance(vertex, p), 2);
  const double c2 = std::pow(distance(vertex, q), 2);
  return std::acos(std::clamp((b2 + c2 - a2) / (2.0 * std::sqrt(b2 * c2)), -1.0, 1.0));
}

inline double shoelace_area(const Triangle& t) {
  return 0.5 * std::fabs((t[1].x - t[0].x) * (t[2].y - t[0].y) -
                         (t[2].x - t[0].x) * (t[1].y - t[0].y));
}

// Brute-force similarity test: every pair of vertex permutations (4! x 4!),
// every direct/indirect similarity fitted on the first distinct pair, all four
// images checked within rel_tol relative to the target's diameter.
inline bool oracle_quads_similar(const Quadrilateral& q1, const Quadrilateral& q2,
                                 double rel_tol = 1e-7) {
  double diameter = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) diameter = std::max(diameter, distance(q2[i], q2[j]));
  }
  std::array<int, 4> s1{0, 1, 2, 3};
  do {
    std::array<int, 4> s2{0, 1, 2, 3};
    do {
      // First pair of q1 (in s1 order) with distinct points.
      int a = -1, b = -1;
      for (int i = 0; i < 4 && a < 0; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          if (q1[s1[i]] != q1[s1[j]]) {
            a = i, b = j;
            break;
          }
        }
      }
      if (q2[s2[a]] == q2[s2[b]]) continue;
      for (bool reflect : {false, true}) {
        const SimilarityTransform g = similarity_from_segment(q1[s1[a]], q1[s1[b]], q2[s2[a]],
                                                              q2[s2[b]], reflect);
        bool all = true;
        for (int i = 0; i < 4 && all; ++i) {
          all = distance(g(q1[s1[i]]), q2[s2[i]]) <= rel_tol * diameter;
        }
        if (all) return true;
      }
    } while (std::next_permutation(s2.begin(), s2.end()));
  } while (std::next_permutation(s1.begin(), s1.end()));
  return false;
}

inline Quadrilateral permuted(const Quadrilateral& q, Rng& rng) {
  std::array<int, 4> idx{0, 1, 2, 3};
  std::shuffle(idx.begin(), idx.end(), rng);
  return Quadrilateral(q[idx[0]], q[idx[1]], q[idx[2]], q[idx[3]]);
}

// Random quadrilateral including tie-heavy families.
inline Quadrilateral random_quad(Rng& rng) {
  const auto roll = rng() % 100;
  if (roll < 8) {  // square
    return Quadrilateral({0, 0}, {1, 0}, {1, 1}, {0, 1});
  }
  if (roll < 16) {  // rhombus
    const double h = uniform(rng, 0.1, 0.9);
    return Quadrilateral({0, 0}, {0.5, h}, {1, 0}, {0.5, -h});
  }
  if (roll < 24) {  // rectangle
    const double w = uniform(rng, 0.2, 3.0);
    return Quadrilateral({0, 0}, {w, 0}, {w, 1}, {0, 1});
  }
  if (roll < 32) {  // collinear, integer positions
    std::array<double, 4> xs{};
    do {
      for (double& x : xs) x = static_cast<double>(rng() % 9);
    } while (xs[0] == xs[1] && xs[1] == xs[2] && xs[2] == xs[3]);
    return Quadrilateral({xs[0], 0}, {xs[1], 0}, {xs[2], 0}, {xs[3], 0});
  }
  if (roll < 40) {  // repeated points
    const Point p = random_point(rng);
    const Point q = random_point(rng);
    const Point r = random_point(rng);
    switch (rng() % 3) {
      case 0: return Quadrilateral(p, p, q, r);
      case 1: return Quadrilateral(p, q, p, q);
      default: return Quadrilateral(p, p, p, q);
    }
  }
  if (roll < 46) {  // kite symmetric about the long axis
    const double x = uniform(rng, 0.2, 0.8);
    const double h = uniform(rng, 0.1, 0.45);
    return Quadrilateral({0, 0}, {1, 0}, {x, h}, {x, -h});
  }
  if (roll < 52) {  // isosceles trapezoid
    const double x = uniform(rng, 0.55, 0.9);
    const double h = uniform(rng, 0.1, 0.4);
    return Quadrilateral({0, 0}, {1, 0}, {x, h}, {1.0 - x, h});
  }
  return Quadrilateral(random_point(rng), random_point(rng), random_point(rng),
                       random_point(rng));
}

inline bool near(Point p, Point q, double tol) {
  return std::fabs(p.x - q.x) <= tol && std::fabs(p.y - q.y) <= tol;
}

// Random point of S_C kept a margin away from its boundary lines.
inline Point random_s_c_point(Rng& rng, double margin = 1e-3) {
  const double x = uniform(rng, 0.5 + margin, 1.0 - margin);
  return {x, uniform(rng, margin, std::sqrt(1.0 - x * x) - margin)};
}

// A (C, D) pair with equal normalized images for each case of the orbit
// count: 0 -> D = C, 1 -> C on x = 1/2 or on the x-axis, 2 -> generic.
inline std::pair<Point, Point> orbit_configuration(Rng& rng, int which) {
  Point c = random_s_c_point(rng, 1e-2);
  if (which == 0) return {c, c};
  if (which == 1) {
    if (rng() & 1u) {
      c.x = 0.5;
      return {c, {c.x, -c.y}};
    }
    c.y = 0.0;
    return {c, {1.0 - c.x, 0.0}};
  }
  switch (rng() % 3) {
    case 0: return {c, {1.0 - c.x, c.y}};
    case 1: return {c, {c.x, -c.y}};
    default: return {c, {1.0 - c.x, -c.y}};
  }
}

// Similarity types among the quadrilaterals A B C D' where D' runs over the
// distinct reflection images of D (just D itself when D = C), counted as
// distinct canonical forms.
inline int enumerated_orbit_type_count(Point c, Point d, double tol = 1e-7) {
  std::vector<Point> variants;
  if (near(c, d, tol)) {
    variants.push_back(d);
  } else {
    for (Point v : {d, Point{1.0 - d.x, d.y}, Point{d.x, -d.y}, Point{1.0 - d.x, -d.y}}) {
      if (std::none_of(variants.begin(), variants.end(),
                       [&](Point w) { return near(v, w, tol); })) {
        variants.push_back(v);
      }
    }
  }
  std::vector<QuadNormalForm> forms;
  for (Point v : variants) {
    const QuadNormalForm f = normalize_quad(Quadrilateral({0, 0}, {1, 0}, c, v));
    if (std::none_of(forms.begin(), forms.end(), [&](const QuadNormalForm& g) {
          return near(f.c, g.c, tol) && near(f.d, g.d, tol);
        })) {
      forms.push_back(f);
    }
  }
  return static_cast<int>(forms.size());
}

}  // namespace simnorm::testing

#endif  // SIMNORM_TESTS_SUPPORT_HPP_
