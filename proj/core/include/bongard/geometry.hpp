#pragma once

#include <cmath>
#include <cstdint>
#include <variant>
#include <vector>

namespace bongard {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 rotated(Vec2 v, double radians) {
  const double c = std::cos(radians), s = std::sin(radians);
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}
inline Vec2 dir_of(double radians) { return {std::cos(radians), std::sin(radians)}; }

struct Rect {
  Vec2 lo{1e300, 1e300};
  Vec2 hi{-1e300, -1e300};

  void include(Vec2 p) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  void include(const Rect& r) {
    include(r.lo);
    include(r.hi);
  }
  bool empty() const { return lo.x > hi.x; }
  double width() const { return empty() ? 0.0 : hi.x - lo.x; }
  double height() const { return empty() ? 0.0 : hi.y - lo.y; }
  bool disjoint(const Rect& o, double gap) const {
    return hi.x + gap < o.lo.x || o.hi.x + gap < lo.x || hi.y + gap < o.lo.y ||
           o.hi.y + gap < lo.y;
  }
};

struct Segment {
  Vec2 p0, p1;
  double length() const { return dist(p0, p1); }
};

// Circular arc from start_angle sweeping by `sweep` radians (signed, CCW
// positive) around `center`.
struct CircularArc {
  Vec2 center;
  double radius = 0.0;
  double start_angle = 0.0;  // radians
  double sweep = 0.0;        // radians, != 0

  Vec2 point_at(double t) const {  // t in [0, 1]
    const double a = start_angle + sweep * t;
    return {center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
  }
  Vec2 start() const { return point_at(0.0); }
  Vec2 end() const { return point_at(1.0); }
  double arc_length() const { return radius * std::fabs(sweep); }
  // Unit tangent in the direction of travel.
  Vec2 tangent_at(double t) const {
    const double a = start_angle + sweep * t;
    const double s = sweep >= 0 ? 1.0 : -1.0;
    return {-std::sin(a) * s, std::cos(a) * s};
  }
};

struct Primitive {
  std::variant<Segment, CircularArc> shape;

  bool is_segment() const { return std::holds_alternative<Segment>(shape); }
  const Segment& segment() const { return std::get<Segment>(shape); }
  const CircularArc& arc() const { return std::get<CircularArc>(shape); }

  Vec2 start() const {
    return is_segment() ? segment().p0 : arc().start();
  }
  Vec2 end() const { return is_segment() ? segment().p1 : arc().end(); }
  double length() const {
    return is_segment() ? segment().length() : arc().arc_length();
  }
  Vec2 point_at(double t) const {
    if (is_segment()) {
      const auto& s = segment();
      return s.p0 + (s.p1 - s.p0) * t;
    }
    return arc().point_at(t);
  }
  Vec2 tangent_at(double t) const {
    if (is_segment()) {
      const auto& s = segment();
      const double len = s.length();
      if (len <= 0.0) return {1.0, 0.0};
      return (s.p1 - s.p0) / len;
    }
    return arc().tangent_at(t);
  }
};

// Execution frame of one connected shape; lets consumers map the geometry
// back into the program-intrinsic unit frame exactly.
struct PathFrame {
  Vec2 origin{0.0, 0.0};
  double heading_deg = 0.0;
  double unit_length = 1.0;
};

struct PathComponent {
  std::vector<Primitive> primitives;  // endpoint-connected in draw order
  PathFrame frame;

  Rect bounding_box() const;
  double total_length() const {
    double L = 0.0;
    for (const auto& pr : primitives) L += pr.length();
    return L;
  }
  // Maps a point into the unit frame (origin at start, heading 0, unit 1).
  Vec2 to_unit(Vec2 p) const {
    const double h = -frame.heading_deg * kDegToRad;
    return rotated((p - frame.origin) / frame.unit_length, h);
  }
  static constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
};

// Executed geometry of a whole program: one component per shape.
struct BasePath {
  std::vector<PathComponent> components;

  Rect bounding_box() const {
    Rect r;
    for (const auto& c : components) r.include(c.bounding_box());
    return r;
  }
};

// Distance from a point to a segment / arc.
double distance_to_segment(Vec2 p, const Segment& s);
double distance_to_arc(Vec2 p, const CircularArc& a);
double distance_to_primitive(Vec2 p, const Primitive& pr);

}  // namespace bongard
