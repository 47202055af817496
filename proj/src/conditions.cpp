#include "lexeval/conditions.hpp"

#include <algorithm>

namespace lexeval {

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::Color: return "color";
    case AttributeKind::Font: return "font";
    case AttributeKind::Position: return "position";
  }
  return "color";
}

std::optional<AttributeKind> parse_attribute_kind(std::string_view name) {
  if (name == "color") return AttributeKind::Color;
  if (name == "font") return AttributeKind::Font;
  if (name == "position") return AttributeKind::Position;
  return std::nullopt;
}

bool is_color(std::string_view value) {
  return std::find(kColors.begin(), kColors.end(), value) != kColors.end();
}

bool is_font(std::string_view value) { return font_pair_index(value).has_value(); }

std::optional<Position> parse_position(std::string_view value) {
  const auto it = std::find(kPositions.begin(), kPositions.end(), value);
  if (it == kPositions.end()) return std::nullopt;
  return static_cast<Position>(it - kPositions.begin());
}

std::string_view to_string(Position position) {
  return kPositions[static_cast<std::size_t>(position)];
}

std::optional<std::size_t> font_pair_index(std::string_view font) {
  for (std::size_t i = 0; i < kFontPairs.size(); ++i) {
    if (kFontPairs[i][0].name == font || kFontPairs[i][1].name == font) return i;
  }
  return std::nullopt;
}

std::optional<std::string_view> font_partner(std::string_view font) {
  for (const auto& pair : kFontPairs) {
    if (pair[0].name == font) return pair[1].name;
    if (pair[1].name == font) return pair[0].name;
  }
  return std::nullopt;
}

std::optional<std::string_view> font_description(std::string_view font) {
  for (const auto& pair : kFontPairs) {
    for (const auto& style : pair) {
      if (style.name == font) return style.description;
    }
  }
  return std::nullopt;
}

bool is_valid_condition_value(AttributeKind kind, std::string_view value) {
  switch (kind) {
    case AttributeKind::Color: return is_color(value);
    case AttributeKind::Font: return is_font(value);
    case AttributeKind::Position: return parse_position(value).has_value();
  }
  return false;
}

}  // namespace lexeval
