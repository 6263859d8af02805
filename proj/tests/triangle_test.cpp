#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "simnorm/conversions.hpp"
#include "simnorm/error.hpp"
#include "simnorm/triangle.hpp"
#include "support.hpp"

namespace simnorm {
namespace {

using namespace simnorm::testing;

const double kSqrt3Half = std::sqrt(3.0) / 2.0;

void ExpectPointNear(Point actual, Point expected, double tol) {
  EXPECT_NEAR(actual.x, expected.x, tol);
  EXPECT_NEAR(actual.y, expected.y, tol);
}

Triangle Equilateral(double side) {
  return Triangle({0, 0}, {side, 0}, {side / 2, side * kSqrt3Half});
}

const Triangle kPythagorean({0, 0}, {3, 0}, {3, 4});
const Triangle kZeroCC({0, 0}, {0, 0}, {2, 0});

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

TEST(Triangle, RejectsTriplePoint) {
  EXPECT_EQ(CodeOf([] { Triangle({1, 1}, {1, 1}, {1, 1}); }), ErrorCode::kInvalidTriangle);
  EXPECT_EQ(CodeOf([] { Triangle({1, 1}, {NAN, 1}, {1, 2}); }), ErrorCode::kInvalidPoint);
  EXPECT_NO_THROW(Triangle({1, 1}, {1, 1}, {1, 2}));
}

TEST(SideLengths, Examples) {
  const SideLengths right = side_lengths(Triangle({0, 0}, {1, 0}, {0, 1}));
  EXPECT_EQ(right.a(), 1.0);
  EXPECT_EQ(right.b(), 1.0);
  EXPECT_NEAR(right.c(), std::sqrt(2.0), 1e-15);

  const SideLengths pyth = side_lengths(kPythagorean);
  EXPECT_EQ(pyth.a(), 3.0);
  EXPECT_EQ(pyth.b(), 4.0);
  EXPECT_EQ(pyth.c(), 5.0);

  const SideLengths rep = side_lengths(kZeroCC);
  EXPECT_EQ(rep.a(), 0.0);
  EXPECT_EQ(rep.b(), 2.0);
  EXPECT_EQ(rep.c(), 2.0);
}

TEST(SideLengths, ValidatesInput) {
  EXPECT_EQ(CodeOf([] { SideLengths::from(1, 1, 3); }), ErrorCode::kInvalidSides);
  EXPECT_EQ(CodeOf([] { SideLengths::from(-1, 1, 1); }), ErrorCode::kInvalidSides);
  EXPECT_EQ(CodeOf([] { SideLengths::from(0, 0, 0); }), ErrorCode::kInvalidSides);
  const SideLengths s = SideLengths::from(5, 3, 4);
  EXPECT_EQ(s.a(), 3.0);
  EXPECT_EQ(s.c(), 5.0);
  EXPECT_NO_THROW(SideLengths::from(1, 1, 2));
}

TEST(SideLengths, RadicandMatchesExpandedPolynomial) {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const SideLengths s = side_lengths(Triangle(random_point(rng), random_point(rng),
                                                random_point(rng)));
    const double a = s.a(), b = s.b(), c = s.c();
    const double expanded = -std::pow(a, 4) - std::pow(b, 4) - std::pow(c, 4) +
                            2 * (a * a * b * b + a * a * c * c + b * b * c * c);
    EXPECT_NEAR(s.radicand(), expanded, 1e-12 * std::pow(a + b + c, 4));
    EXPECT_GE(s.radicand(), 0.0);
  }
  EXPECT_EQ(SideLengths::from(1, 1, 2).radicand(), 0.0);
  EXPECT_EQ(SideLengths::from(0, 3, 3).radicand(), 0.0);
}

TEST(CNormalPoint, Examples) {
  ExpectPointNear(c_normal_point(Equilateral(1.0)), {0.5, kSqrt3Half}, 1e-12);
  ExpectPointNear(c_normal_point(kZeroCC), {1.0, 0.0}, 1e-12);
  // x^2 + y^2 = (4/5)^2 and (x-1)^2 + y^2 = (3/5)^2 solved by hand.
  ExpectPointNear(c_normal_point(kPythagorean), {0.64, 0.48}, 1e-12);
}

TEST(BNormalPoint, Examples) {
  ExpectPointNear(b_normal_point(Equilateral(1.0)), {0.5, kSqrt3Half}, 1e-12);
  ExpectPointNear(b_normal_point(kZeroCC), {1.0, 0.0}, 1e-12);
  ExpectPointNear(b_normal_point(kPythagorean), {1.0, 0.75}, 1e-12);
}

TEST(ANormalPoint, Examples) {
  ExpectPointNear(a_normal_point(Equilateral(1.0)), {0.5, kSqrt3Half}, 1e-12);
  ExpectPointNear(a_normal_point(kPythagorean), {1.0, 4.0 / 3.0}, 1e-12);
  EXPECT_EQ(CodeOf([] { a_normal_point(kZeroCC); }), ErrorCode::kUnboundedType);
}

TEST(NormalPoint, CircleKindIsNotAPoint) {
  EXPECT_EQ(CodeOf([] { normal_point(FormKind::kCircle, kPythagorean); }),
            ErrorCode::kUnsupportedKind);
}

TEST(NormalPoint, AgreesWithEnumerationOracle) {
  Rng rng(22);
  for (int i = 0; i < 3000; ++i) {
    const Triangle t = random_triangle(rng);
    ExpectPointNear(c_normal_point(t), oracle_normal_point(t, 2), 1e-9);
    ExpectPointNear(b_normal_point(t), oracle_normal_point(t, 1), 1e-9);
    if (!is_zero_c_c(t)) {
      const Point a = a_normal_point(t);
      ExpectPointNear(a, oracle_normal_point(t, 0), 1e-9 * std::max(1.0, std::hypot(a.x, a.y)));
    }
  }
}

TEST(NormalPoint, LandsInItsDomain) {
  Rng rng(23);
  for (int i = 0; i < 3000; ++i) {
    const Triangle t = random_triangle(rng);
    EXPECT_TRUE(in_S_C(c_normal_point(t)));
    EXPECT_TRUE(in_S_B(b_normal_point(t)));
    if (!is_zero_c_c(t)) {
      EXPECT_TRUE(in_S_A(a_normal_point(t)));
    }
  }
}

TEST(NormalPoint, PermutationInvariant) {
  Rng rng(24);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = random_triangle(rng);
    std::array<int, 3> idx{0, 1, 2};
    const Point c = c_normal_point(t);
    const Point b = b_normal_point(t);
    do {
      const Triangle p(t[idx[0]], t[idx[1]], t[idx[2]]);
      ExpectPointNear(c_normal_point(p), c, 1e-12);
      ExpectPointNear(b_normal_point(p), b, 1e-12);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST(NormalPoint, IsoscelesTiesAreImmaterial) {
  const Triangle iso({0, 0}, {2, 0}, {1, 3});
  const Triangle rotated({1, 3}, {0, 0}, {2, 0});
  ExpectPointNear(c_normal_point(iso), c_normal_point(rotated), 1e-15);
  ExpectPointNear(a_normal_point(iso), a_normal_point(rotated), 1e-15);
}

TEST(NormalPoint, AreaIdentity) {
  Rng rng(25);
  for (int i = 0; i < 2000; ++i) {
    const Triangle t(random_point(rng), random_point(rng), random_point(rng));
    const double c = side_lengths(t).c();
    EXPECT_NEAR(c_normal_point(t).y, 2.0 * shoelace_area(t) / (c * c), 1e-9);
  }
}

TEST(Domains, Examples) {
  const Point eq{0.5, kSqrt3Half};
  EXPECT_TRUE(in_S_C(eq));
  EXPECT_TRUE(in_S_B(eq));
  EXPECT_TRUE(in_S_A(eq));
  EXPECT_TRUE(in_S_C({0.64, 0.48}));
  EXPECT_FALSE(in_S_C({0.4, 0.1}));
  EXPECT_FALSE(in_S_C({0.7, -0.1}));
  EXPECT_FALSE(in_S_C({0.9, 0.9}));
  EXPECT_TRUE(in_S_B({1.0, 0.75}));
  EXPECT_FALSE(in_S_B({0.7, 0.3}));  // inside the unit circle
  EXPECT_FALSE(in_S_B({2.5, 0.1}));
  EXPECT_TRUE(in_S_A({1.0, 4.0 / 3.0}));
  EXPECT_TRUE(in_S_A({50.0, 80.0}));
  EXPECT_FALSE(in_S_A({1.0, 0.5}));
}

TEST(Domains, ToleranceRelaxesBoundaries) {
  const Tolerance tol(1e-6);
  EXPECT_TRUE(in_S_C({0.5 - 5e-7, 0.3}, tol));
  EXPECT_FALSE(in_S_C({0.5 - 5e-7, 0.3}));
}

TEST(CircleNormalForm, Examples) {
  const Triangle eq = circle_normal_form(kPi / 3, kPi / 3, kPi / 3);
  ExpectPointNear(eq[2], {1.0, 0.0}, 0.0);
  ExpectPointNear(eq[1], {std::cos(-2 * kPi / 3), std::sin(-2 * kPi / 3)}, 1e-15);
  ExpectPointNear(eq[0], {std::cos(2 * kPi / 3), std::sin(2 * kPi / 3)}, 1e-15);

  const Triangle right = circle_normal_form(kPi / 4, kPi / 4, kPi / 2);
  ExpectPointNear(right[1], {0.0, -1.0}, 1e-15);
  ExpectPointNear(right[0], {0.0, 1.0}, 1e-15);
  // AB passes through the origin.
  ExpectPointNear(0.5 * (right[0] + right[1]), {0.0, 0.0}, 1e-15);

  EXPECT_EQ(CodeOf([] { circle_normal_form(0.0, kPi / 2, kPi / 2); }),
            ErrorCode::kDegenerateAngles);
  EXPECT_EQ(CodeOf([] { circle_normal_form(0.5, 0.5, 0.5); }), ErrorCode::kDegenerateAngles);
}

TEST(CircleNormalForm, RecoversAnglesAndPassesDefinition) {
  Rng rng(26);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = uniform(rng, 1e-3, kPi / 3);
    const double beta = uniform(rng, alpha, (kPi - alpha) / 2);
    const AngleTriple ang = AngleTriple::from(alpha, beta, kPi - alpha - beta);
    const Triangle t = circle_normal_form(ang);
    EXPECT_TRUE(is_normal_circle_triangle(t));
    EXPECT_NEAR(oracle_angle(t[0], t[1], t[2]), alpha, 1e-9);
    EXPECT_NEAR(oracle_angle(t[1], t[0], t[2]), beta, 1e-9);
    EXPECT_GT(t[0].y, 0.0);
    EXPECT_LT(t[1].y, 0.0);
  }
}

TEST(IsNormalCircleTriangle, Rejections) {
  EXPECT_TRUE(is_normal_circle_triangle(circle_normal_form(kPi / 3, kPi / 3, kPi / 3)));
  // C not at (1,0).
  EXPECT_FALSE(is_normal_circle_triangle(Triangle({0, 1}, {-1, 0}, {0, -1})));
  // Both free vertices above the x-axis.
  const double s = std::sqrt(0.5);
  EXPECT_FALSE(is_normal_circle_triangle(Triangle({1, 0}, {s, s}, {-s, s})));
  // A vertex off the unit circle.
  EXPECT_FALSE(is_normal_circle_triangle(Triangle({1, 0}, {0, 2}, {0, -1})));
  // alpha > beta: A and B swapped relative to the normal placement.
  const Triangle t = circle_normal_form(0.3, 1.0, kPi - 1.3);
  EXPECT_FALSE(is_normal_circle_triangle(Triangle({t[0].x, -t[0].y}, {t[1].x, -t[1].y}, t[2])));
}

TEST(CircleNormalForm, DistinctTriplesAreNotSimilar) {
  Rng rng(27);
  for (int i = 0; i < 500; ++i) {
    const double a1 = uniform(rng, 0.05, kPi / 3);
    const double b1 = uniform(rng, a1, (kPi - a1) / 2);
    const double a2 = uniform(rng, 0.05, kPi / 3);
    const double b2 = uniform(rng, a2, (kPi - a2) / 2);
    if (std::fabs(a1 - a2) < 1e-4 && std::fabs(b1 - b2) < 1e-4) continue;
    const Triangle t1 = circle_normal_form(a1, b1, kPi - a1 - b1);
    const Triangle t2 = circle_normal_form(a2, b2, kPi - a2 - b2);
    EXPECT_FALSE(triangles_similar(t1, t2));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(kPythagorean), (TriangleClass{AngleClass::kRight, SideClass::kScalene}));
  EXPECT_EQ(classify(Equilateral(1.0)),
            (TriangleClass{AngleClass::kAcute, SideClass::kEquilateral}));
  EXPECT_EQ(classify(Triangle({0, 0}, {1, 0}, {2, 0})),
            (TriangleClass{AngleClass::kDegenerate, SideClass::kIsosceles}));
  EXPECT_EQ(classify(Triangle({0, 0}, {4, 0}, {1, 1})).angle_class, AngleClass::kObtuse);
  EXPECT_EQ(classify(Triangle({0, 0}, {2, 0}, {1, 3})),
            (TriangleClass{AngleClass::kAcute, SideClass::kIsosceles}));
  EXPECT_EQ(classify(kZeroCC).angle_class, AngleClass::kDegenerate);
}

TEST(Classify, AgreesWithPythagoreanTest) {
  Rng rng(28);
  for (int i = 0; i < 3000; ++i) {
    const Triangle t(random_point(rng), random_point(rng), random_point(rng));
    const TriangleClass cls = classify(t);
    if (cls.angle_class == AngleClass::kDegenerate) continue;
    const SideLengths s = side_lengths(t).normalized();
    const double residual = s.a() * s.a() + s.b() * s.b() - 1.0;
    AngleClass expected = AngleClass::kRight;
    if (residual > 2e-9) expected = AngleClass::kAcute;
    if (residual < -2e-9) expected = AngleClass::kObtuse;
    EXPECT_EQ(cls.angle_class, expected);
  }
}

TEST(TrianglesSimilar, Examples) {
  Rng rng(29);
  const Triangle t(random_point(rng), random_point(rng), random_point(rng));
  EXPECT_TRUE(triangles_similar(t, apply(random_transform(rng), t)));
  EXPECT_TRUE(triangles_similar(kPythagorean, Triangle({1, 1}, {7, 1}, {7, 9})));
  EXPECT_FALSE(triangles_similar(kPythagorean, Equilateral(1.0)));
  EXPECT_TRUE(triangles_similar(kZeroCC, Triangle({5, 5}, {5, 6}, {5, 6})));
  EXPECT_TRUE(triangles_similar(Triangle({0, 0}, {1, 0}, {3, 0}),
                                Triangle({0, 0}, {0, -2}, {0, -6})));
}

TEST(TrianglesSimilar, InvariantUnderRandomTransforms) {
  Rng rng(30);
  for (int i = 0; i < 2000; ++i) {
    const Triangle t = random_triangle(rng);
    const Triangle g = apply(random_transform(rng), t);
    ExpectPointNear(c_normal_point(g), c_normal_point(t), 1e-7);
    ExpectPointNear(b_normal_point(g), b_normal_point(t), 1e-7);
    if (!is_zero_c_c(t)) {
      const Point a = a_normal_point(t);
      ExpectPointNear(a_normal_point(g), a, 1e-7 * std::max(1.0, std::hypot(a.x, a.y)));
    }
  }
}

}  // namespace
}  // namespace simnorm
