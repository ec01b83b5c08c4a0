#include "bongard/actions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "bongard/errors.hpp"
#include "json.hpp"

namespace bongard {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<MovingType> moving_type_from(std::string_view s) {
  if (s == "normal") return MovingType::Normal;
  if (s == "zigzag") return MovingType::Zigzag;
  if (s == "triangle") return MovingType::Triangle;
  if (s == "circle") return MovingType::Circle;
  if (s == "square") return MovingType::Square;
  return std::nullopt;
}

std::optional<ActionKind> kind_from(std::string_view s) {
  if (s == "line") return ActionKind::Line;
  if (s == "arc") return ActionKind::Arc;
  return std::nullopt;
}

double parse_unit_value(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty()) raise(Errc::MalformedSyntax, "empty " + std::string(what));
  double v = 0.0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end)
    raise(Errc::MalformedSyntax, "bad numeric value '" + std::string(s) + "'");
  if (!(v >= 0.0 && v <= 1.0))
    raise(Errc::ValueOutOfRange,
          std::string(what) + " " + std::string(s) + " outside [0,1]");
  return v;
}

struct SplitAction {
  std::string_view head;
  std::string_view arg0, arg1, arg2;
};

SplitAction split_action_text(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    raise(Errc::MalformedSyntax, "expected <kind>(<type>,<length>,<angle>), got '" +
                                     std::string(text) + "'");
  std::string_view head = trim(text.substr(0, open));
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  const auto c1 = inner.find(',');
  if (c1 == std::string_view::npos)
    raise(Errc::MalformedSyntax, "missing arguments in '" + std::string(text) + "'");
  const auto c2 = inner.find(',', c1 + 1);
  if (c2 == std::string_view::npos)
    raise(Errc::MalformedSyntax, "expected three arguments in '" + std::string(text) + "'");
  if (inner.find(',', c2 + 1) != std::string_view::npos)
    raise(Errc::MalformedSyntax, "too many arguments in '" + std::string(text) + "'");
  return {head, trim(inner.substr(0, c1)), trim(inner.substr(c1 + 1, c2 - c1 - 1)),
          trim(inner.substr(c2 + 1))};
}

std::string format_fixed3(double v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string_view to_string(MovingType t) {
  switch (t) {
    case MovingType::Normal: return "normal";
    case MovingType::Zigzag: return "zigzag";
    case MovingType::Triangle: return "triangle";
    case MovingType::Circle: return "circle";
    case MovingType::Square: return "square";
  }
  return "normal";
}

std::string_view to_string(ActionKind k) {
  return k == ActionKind::Line ? "line" : "arc";
}

double quantize3(double v) { return std::round(v * 1000.0) / 1000.0; }

ValueGrid ValueGrid::standard() {
  return ValueGrid{{0.25, 0.5, 0.75, 1.0},
                   {0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875}};
}

bool ValueGrid::contains_length(double v, double tol) const {
  return std::any_of(lengths.begin(), lengths.end(),
                     [&](double g) { return std::fabs(g - v) <= tol; });
}

bool ValueGrid::contains_angle(double v, double tol) const {
  return std::any_of(angles.begin(), angles.end(),
                     [&](double g) { return std::fabs(g - v) <= tol; });
}

BaseAction parse_action(std::string_view text) {
  const auto parts = split_action_text(text);
  const auto kind = kind_from(parts.head);
  if (!kind) raise(Errc::UnknownKind, "unknown action kind '" + std::string(parts.head) + "'");
  const auto type = moving_type_from(parts.arg0);
  if (!type)
    raise(Errc::UnknownMovingType,
          "unknown moving type '" + std::string(parts.arg0) + "'");
  BaseAction a;
  a.kind = *kind;
  a.moving_type = *type;
  a.length = parse_unit_value(parts.arg1, "length");
  a.angle = parse_unit_value(parts.arg2, "angle");
  return a;
}

std::string serialize_action(const BaseAction& a) {
  std::string out{to_string(a.kind)};
  out += '(';
  out += to_string(a.moving_type);
  out += ',';
  out += format_fixed3(a.length);
  out += ',';
  out += format_fixed3(a.angle);
  out += ')';
  return out;
}

StyleFreeAction parse_stroke(std::string_view text) {
  const auto parts = split_action_text(text);
  const auto kind = kind_from(parts.head);
  if (!kind) raise(Errc::UnknownKind, "unknown action kind '" + std::string(parts.head) + "'");
  if (parts.arg0 != "_")
    raise(Errc::MalformedSyntax,
          "library strokes use the '_' placeholder for the moving type, got '" +
              std::string(parts.arg0) + "'");
  StyleFreeAction a;
  a.kind = *kind;
  a.length = parse_unit_value(parts.arg1, "length");
  a.angle = parse_unit_value(parts.arg2, "angle");
  return a;
}

std::string serialize_stroke(const StyleFreeAction& a) {
  std::string out{to_string(a.kind)};
  out += "(_,";
  out += format_fixed3(a.length);
  out += ',';
  out += format_fixed3(a.angle);
  out += ')';
  return out;
}

std::string program_to_json(const ActionProgram& p) {
  nlohmann::json shapes = nlohmann::json::array();
  for (const auto& shape : p.shapes) {
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& a : shape) seq.push_back(serialize_action(a));
    shapes.push_back(std::move(seq));
  }
  return nlohmann::json{{"shapes", shapes}}.dump();
}

ActionProgram program_from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("shapes") ||
      !j["shapes"].is_array())
    raise(Errc::MalformedSyntax, "program JSON must be {\"shapes\": [[...]]}");
  ActionProgram p;
  for (const auto& shape : j["shapes"]) {
    if (!shape.is_array())
      raise(Errc::MalformedSyntax, "each shape must be an array of actions");
    std::vector<BaseAction> seq;
    for (const auto& item : shape) {
      if (!item.is_string())
        raise(Errc::MalformedSyntax, "actions must be strings");
      seq.push_back(parse_action(item.get<std::string>()));
    }
    p.shapes.push_back(std::move(seq));
  }
  return p;
}

ValidationReport validate_program(const ActionProgram& p, const ValueGrid* grid,
                                  bool freeform_mode) {
  ValidationReport report;
  auto add = [&](ValidationIssue::Kind k, std::size_t shape, std::size_t action,
                 std::string detail) {
    report.issues.push_back({k, shape, action, std::move(detail)});
  };

  if (p.shapes.empty() || p.shapes.size() > 2)
    add(ValidationIssue::Kind::ShapeCount, 0, 0,
        "program has " + std::to_string(p.shapes.size()) + " shapes, expected 1 or 2");

  for (std::size_t s = 0; s < p.shapes.size(); ++s) {
    const auto& shape = p.shapes[s];
    if (shape.empty()) {
      add(ValidationIssue::Kind::EmptyShape, s, 0, "shape has no actions");
      continue;
    }
    if (freeform_mode &&
        (shape.size() < kMinFreeformStrokes || shape.size() > kMaxFreeformStrokes))
      add(ValidationIssue::Kind::StrokeCount, s, 0,
          "shape has " + std::to_string(shape.size()) + " strokes, expected 2..9");
    for (std::size_t i = 0; i < shape.size(); ++i) {
      const auto& a = shape[i];
      if (!(a.length >= 0.0 && a.length <= 1.0))
        add(ValidationIssue::Kind::ValueRange, s, i, "length outside [0,1]");
      if (!(a.angle >= 0.0 && a.angle <= 1.0))
        add(ValidationIssue::Kind::ValueRange, s, i, "angle outside [0,1]");
      if (a.kind == ActionKind::Arc && std::fabs(a.angle - 0.5) < 1e-9)
        add(ValidationIssue::Kind::DegenerateArc, s, i, "arc with zero sweep");
      if (grid) {
        if (!grid->contains_length(a.length))
          add(ValidationIssue::Kind::GridMembership, s, i,
              "length " + format_fixed3(a.length) + " not on grid");
        if (!grid->contains_angle(a.angle))
          add(ValidationIssue::Kind::GridMembership, s, i,
              "angle " + format_fixed3(a.angle) + " not on grid");
      }
    }
  }
  return report;
}

namespace {

// Alternatives for one field of one action under a grid; empty when the
// field cannot change.
template <typename T>
std::vector<T> exclude(const std::vector<T>& values, T old, double tol) {
  std::vector<T> out;
  for (const auto& v : values)
    if (std::fabs(v - old) > tol) out.push_back(v);
  return out;
}

}  // namespace

ActionProgram perturb_program(const ActionProgram& p, const ValueGrid& grid,
                              RandomSource& rng, FieldMask mask) {
  struct Choice {
    std::size_t shape, action;
    ActionField field;
  };
  std::vector<Choice> eligible;
  for (std::size_t s = 0; s < p.shapes.size(); ++s) {
    for (std::size_t i = 0; i < p.shapes[s].size(); ++i) {
      const auto& a = p.shapes[s][i];
      if (mask.kind) {
        // Flipping a line with angle 0.5 into an arc would produce a zero
        // sweep; every other flip is valid.
        const bool would_degenerate =
            a.kind == ActionKind::Line && std::fabs(a.angle - 0.5) < 1e-9;
        if (!would_degenerate) eligible.push_back({s, i, ActionField::Kind});
      }
      if (mask.moving_type) eligible.push_back({s, i, ActionField::MovingType});
      if (mask.length && exclude(grid.lengths, a.length, 5e-4).size() > 0)
        eligible.push_back({s, i, ActionField::Length});
      if (mask.angle) {
        auto alts = exclude(grid.angles, a.angle, 5e-4);
        if (a.kind == ActionKind::Arc)
          std::erase_if(alts, [](double v) { return std::fabs(v - 0.5) < 1e-9; });
        if (!alts.empty()) eligible.push_back({s, i, ActionField::Angle});
      }
    }
  }
  if (eligible.empty())
    raise(Errc::ExhaustedAlternatives, "no perturbable (action, field) position");

  const auto& choice = eligible[static_cast<std::size_t>(
      rng.uniform_index(eligible.size()))];
  ActionProgram out = p;
  BaseAction& a = out.shapes[choice.shape][choice.action];
  switch (choice.field) {
    case ActionField::Kind:
      a.kind = a.kind == ActionKind::Line ? ActionKind::Arc : ActionKind::Line;
      break;
    case ActionField::MovingType: {
      std::vector<MovingType> alts;
      for (auto t : kAllMovingTypes)
        if (t != a.moving_type) alts.push_back(t);
      a.moving_type = alts[static_cast<std::size_t>(rng.uniform_index(alts.size()))];
      break;
    }
    case ActionField::Length: {
      auto alts = exclude(grid.lengths, a.length, 5e-4);
      a.length = alts[static_cast<std::size_t>(rng.uniform_index(alts.size()))];
      break;
    }
    case ActionField::Angle: {
      auto alts = exclude(grid.angles, a.angle, 5e-4);
      if (a.kind == ActionKind::Arc)
        std::erase_if(alts, [](double v) { return std::fabs(v - 0.5) < 1e-9; });
      a.angle = alts[static_cast<std::size_t>(rng.uniform_index(alts.size()))];
      break;
    }
  }
  return out;
}

std::size_t program_edit_distance(const ActionProgram& p, const ActionProgram& q) {
  if (p.shapes.size() != q.shapes.size()) return kMaxEditDistance;
  for (std::size_t s = 0; s < p.shapes.size(); ++s)
    if (p.shapes[s].size() != q.shapes[s].size()) return kMaxEditDistance;

  std::size_t dist = 0;
  for (std::size_t s = 0; s < p.shapes.size(); ++s) {
    for (std::size_t i = 0; i < p.shapes[s].size(); ++i) {
      const auto& a = p.shapes[s][i];
      const auto& b = q.shapes[s][i];
      if (a.kind != b.kind) ++dist;
      if (a.moving_type != b.moving_type) ++dist;
      if (std::fabs(a.length - b.length) > 5e-4) ++dist;
      if (std::fabs(a.angle - b.angle) > 5e-4) ++dist;
    }
  }
  return dist;
}

}  // namespace bongard
