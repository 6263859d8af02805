#ifndef SIMNORM_CONVERSIONS_HPP_
#define SIMNORM_CONVERSIONS_HPP_

#include <optional>

#include "simnorm/geometry.hpp"
#include "simnorm/triangle.hpp"

namespace simnorm {

// Closed-form normal point N_kind(a, b, c) for the one-vertex forms.
// Throws Error(kUnboundedType) for kAVertex with a == 0 and
// Error(kUnsupportedKind) for kCircle.
Point normal_point_from_sides(FormKind kind, const SideLengths& s);
// Validates raw lengths first (Error(kInvalidSides)).
Point normal_point_from_sides(FormKind kind, double l1, double l2, double l3);

// Law of sines, then the closed form above.
Point normal_point_from_angles(FormKind kind, const AngleTriple& angles);

// Reads the angles of the triangle (0,0), (1,0), p. Returns std::nullopt for
// the degenerate locus y = 0 (within tol). Throws Error(kOutOfDomain) when p
// is outside S_kind.
std::optional<AngleTriple> angles_from_normal_point(FormKind kind, Point p, Tolerance tol = {});

// Law of cosines (in the atan2 form). Throws Error(kDegenerate) when the
// triangle is collinear or has a zero side within tol relative to c.
AngleTriple angles_from_sides(const SideLengths& s, Tolerance tol = {});

// Side lengths scaled to c = 1 from angles, via the law of sines.
SideLengths sides_from_angles(const AngleTriple& angles);

}  // namespace simnorm

#endif  // SIMNORM_CONVERSIONS_HPP_
