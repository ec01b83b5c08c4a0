#pragma once

#include <span>
#include <vector>

#include "bongard/actions.hpp"
#include "bongard/geometry.hpp"

namespace bongard {

// Placement of one shape on the canvas: starting point, initial heading and
// the canvas length of a unit stroke.
struct Pose {
  Vec2 origin{0.0, 0.0};
  double heading_deg = 0.0;
  double unit_length = 1.0;
};

inline Pose unit_pose() { return Pose{{0.0, 0.0}, 0.0, 1.0}; }

// Angle semantics: a normalized argument a maps to the signed angle
// (a - 0.5) * 360 degrees. For a line this is the pre-move turn; for an arc
// it is the sweep, with the radius derived from the arc length.
double normalized_to_degrees(double a);

// Executes a program with one pose per shape. The pen stays down within a
// shape; zero-length lines act as pure turns and emit no primitive.
// Throws DegenerateArc for an arc with zero sweep.
BasePath execute_program(const ActionProgram& p, std::span<const Pose> poses);

// Single-shape convenience; for two-shape programs every shape starts at the
// same pose (useful only for unit-frame analysis).
BasePath execute_program(const ActionProgram& p, const Pose& pose);

// Executes at the unit pose (all shapes); the canonical geometry used by
// attribute evaluation and program-level checks.
BasePath execute_at_unit(const ActionProgram& p);

}  // namespace bongard
