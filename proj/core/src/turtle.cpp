#include "bongard/turtle.hpp"

#include <cmath>

#include "bongard/errors.hpp"

namespace bongard {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
}  // namespace

double normalized_to_degrees(double a) { return (a - 0.5) * 360.0; }

Rect PathComponent::bounding_box() const {
  Rect r;
  for (const auto& pr : primitives) {
    if (pr.is_segment()) {
      r.include(pr.segment().p0);
      r.include(pr.segment().p1);
    } else {
      const auto& a = pr.arc();
      r.include(a.start());
      r.include(a.end());
      // Axis-extreme angles covered by the sweep.
      const double a0 = a.start_angle;
      const double a1 = a.start_angle + a.sweep;
      const double lo = std::min(a0, a1), hi = std::max(a0, a1);
      for (int k = static_cast<int>(std::ceil(lo / (kPi / 2))) ;
           k * (kPi / 2) <= hi; ++k) {
        const double ang = k * (kPi / 2);
        r.include({a.center.x + a.radius * std::cos(ang),
                   a.center.y + a.radius * std::sin(ang)});
      }
    }
  }
  if (r.empty()) r.include(frame.origin);
  return r;
}

double distance_to_segment(Vec2 p, const Segment& s) {
  const Vec2 d = s.p1 - s.p0;
  const double len2 = dot(d, d);
  if (len2 <= 0.0) return dist(p, s.p0);
  double t = dot(p - s.p0, d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, s.p0 + d * t);
}

double distance_to_arc(Vec2 p, const CircularArc& a) {
  const Vec2 rel = p - a.center;
  const double r = norm(rel);
  double ang = std::atan2(rel.y, rel.x);
  // Bring the angle into the sweep interval if possible.
  const double lo = std::min(a.start_angle, a.start_angle + a.sweep);
  const double hi = std::max(a.start_angle, a.start_angle + a.sweep);
  while (ang < lo) ang += 2 * kPi;
  while (ang > hi && ang - 2 * kPi >= lo) ang -= 2 * kPi;
  if (ang >= lo && ang <= hi) return std::fabs(r - a.radius);
  return std::min(dist(p, a.start()), dist(p, a.end()));
}

double distance_to_primitive(Vec2 p, const Primitive& pr) {
  return pr.is_segment() ? distance_to_segment(p, pr.segment())
                         : distance_to_arc(p, pr.arc());
}

BasePath execute_program(const ActionProgram& p, std::span<const Pose> poses) {
  if (poses.size() != p.shapes.size())
    raise(Errc::ArityMismatch,
          "expected " + std::to_string(p.shapes.size()) + " poses, got " +
              std::to_string(poses.size()));

  BasePath path;
  for (std::size_t s = 0; s < p.shapes.size(); ++s) {
    const Pose& pose = poses[s];
    PathComponent comp;
    comp.frame = PathFrame{pose.origin, pose.heading_deg, pose.unit_length};

    Vec2 pos = pose.origin;
    double heading = pose.heading_deg * kDegToRad;

    for (std::size_t i = 0; i < p.shapes[s].size(); ++i) {
      const BaseAction& a = p.shapes[s][i];
      const double arg_deg = normalized_to_degrees(a.angle);
      const double arg_rad = arg_deg * kDegToRad;
      const double len = a.length * pose.unit_length;

      if (a.kind == ActionKind::Line) {
        heading += arg_rad;
        if (a.length > 0.0) {
          const Vec2 next = pos + dir_of(heading) * len;
          comp.primitives.push_back({Segment{pos, next}});
          pos = next;
        }
      } else {
        if (std::fabs(arg_rad) < 1e-12)
          raise(Errc::DegenerateArc,
                "arc with zero sweep at shape " + std::to_string(s) +
                    " action " + std::to_string(i));
        if (a.length > 0.0) {
          const double radius = len / std::fabs(arg_rad);
          // Center sits on the left of the heading for CCW sweeps, on the
          // right for CW; the position angle then advances by the signed
          // sweep in both cases.
          const double side = arg_rad > 0 ? 1.0 : -1.0;
          const Vec2 center = pos + dir_of(heading + side * kPi / 2) * radius;
          const Vec2 rel = pos - center;
          CircularArc arc;
          arc.center = center;
          arc.radius = radius;
          arc.start_angle = std::atan2(rel.y, rel.x);
          arc.sweep = arg_rad;
          comp.primitives.push_back({arc});
          pos = arc.end();
        }
        heading += arg_rad;
      }
    }
    path.components.push_back(std::move(comp));
  }
  return path;
}

BasePath execute_program(const ActionProgram& p, const Pose& pose) {
  std::vector<Pose> poses(p.shapes.size(), pose);
  return execute_program(p, poses);
}

BasePath execute_at_unit(const ActionProgram& p) {
  return execute_program(p, unit_pose());
}

}  // namespace bongard
