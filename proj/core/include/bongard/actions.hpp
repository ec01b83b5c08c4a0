#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bongard/rng.hpp"

namespace bongard {

// Stroke rendering style. Part of the concept in free-form problems, a
// nuisance everywhere else.
enum class MovingType : std::uint8_t { Normal, Zigzag, Triangle, Circle, Square };
inline constexpr std::array<MovingType, 5> kAllMovingTypes = {
    MovingType::Normal, MovingType::Zigzag, MovingType::Triangle,
    MovingType::Circle, MovingType::Square};

enum class ActionKind : std::uint8_t { Line, Arc };

std::string_view to_string(MovingType t);
std::string_view to_string(ActionKind k);

// One drawing command: kind(moving_type, length, angle) with both numeric
// arguments normalized into [0, 1].
struct BaseAction {
  ActionKind kind = ActionKind::Line;
  MovingType moving_type = MovingType::Normal;
  double length = 0.0;
  double angle = 0.0;

  friend bool operator==(const BaseAction&, const BaseAction&) = default;
};

// An ordered list of per-shape stroke sequences (one or two shapes).
struct ActionProgram {
  std::vector<std::vector<BaseAction>> shapes;

  std::size_t total_actions() const {
    std::size_t n = 0;
    for (const auto& s : shapes) n += s.size();
    return n;
  }
  friend bool operator==(const ActionProgram&, const ActionProgram&) = default;
};

// Well-separated discrete argument values used by the free-form sampler.
struct ValueGrid {
  std::vector<double> lengths;
  std::vector<double> angles;

  static ValueGrid standard();  // 4 length stops x 8 angle stops
  bool contains_length(double v, double tol = 5e-4) const;
  bool contains_angle(double v, double tol = 5e-4) const;

  friend bool operator==(const ValueGrid&, const ValueGrid&) = default;
};

// --- text format ---------------------------------------------------------
//
// The canonical grammar is lowercase, comma separated, three-decimal floats:
//   line(normal,0.500,0.500)
//   arc(zigzag,0.250,0.750)
// The moving-type slot also accepts the placeholder "_" used by shape
// library stroke lists (parsed as Normal with styled=false).

BaseAction parse_action(std::string_view text);
std::string serialize_action(const BaseAction& a);

// Stroke variant used by the shape library: no moving type specified.
struct StyleFreeAction {
  ActionKind kind = ActionKind::Line;
  double length = 0.0;
  double angle = 0.0;
  friend bool operator==(const StyleFreeAction&, const StyleFreeAction&) = default;
};
StyleFreeAction parse_stroke(std::string_view text);
std::string serialize_stroke(const StyleFreeAction& a);

// Quantizes a value to the 3-decimal wire resolution.
double quantize3(double v);

// Program <-> JSON text: {"shapes": [["line(normal,0.500,0.500)", ...], ...]}
std::string program_to_json(const ActionProgram& p);
ActionProgram program_from_json(std::string_view json_text);

// --- validation ----------------------------------------------------------

struct ValidationIssue {
  enum class Kind {
    ShapeCount,     // not 1 or 2 shapes
    EmptyShape,     // a shape with no actions
    StrokeCount,    // outside [2, 9] in free-form mode
    ValueRange,     // length/angle outside [0, 1]
    GridMembership, // value not on the supplied grid
    DegenerateArc,  // arc with zero sweep
  };
  Kind kind;
  std::size_t shape = 0;
  std::size_t action = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool clean() const { return issues.empty(); }
};

inline constexpr std::size_t kMinFreeformStrokes = 2;
inline constexpr std::size_t kMaxFreeformStrokes = 9;

// Grid may be null; stroke-count limits apply only in free-form mode.
ValidationReport validate_program(const ActionProgram& p,
                                  const ValueGrid* grid = nullptr,
                                  bool freeform_mode = false);

// --- perturbation & distance --------------------------------------------

enum class ActionField : std::uint8_t { Kind, MovingType, Length, Angle };

struct FieldMask {
  bool kind = true;
  bool moving_type = true;
  bool length = true;
  bool angle = true;
  bool enabled(ActionField f) const {
    switch (f) {
      case ActionField::Kind: return kind;
      case ActionField::MovingType: return moving_type;
      case ActionField::Length: return length;
      case ActionField::Angle: return angle;
    }
    return false;
  }
};

// Changes exactly one field of exactly one action; the replacement value is
// drawn uniformly from the grid/variant alternatives excluding the old value.
// Kind flips that would create a zero-sweep arc are ineligible.
ActionProgram perturb_program(const ActionProgram& p, const ValueGrid& grid,
                              RandomSource& rng, FieldMask mask = {});

// Number of (action, field) positions at which two structurally comparable
// programs differ; kMaxEditDistance when shape counts or lengths differ.
inline constexpr std::size_t kMaxEditDistance = ~std::size_t{0};
std::size_t program_edit_distance(const ActionProgram& p, const ActionProgram& q);

}  // namespace bongard
