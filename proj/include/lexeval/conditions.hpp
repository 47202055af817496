#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace lexeval {

enum class AttributeKind { Color, Font, Position };

std::string_view to_string(AttributeKind kind);
std::optional<AttributeKind> parse_attribute_kind(std::string_view name);

inline constexpr std::array<std::string_view, 12> kColors = {
    "red",  "blue", "green", "yellow", "orange", "purple",
    "pink", "brown", "black", "white", "gray",  "cyan"};

struct FontStyle {
  std::string_view name;
  std::string_view description;  // phrase used in bench prompts
};

// Opposing styles of one pair never appear in the same prompt.
inline constexpr std::array<std::array<FontStyle, 2>, 5> kFontPairs = {{
    {{{"cursive style", "in the cursive font style"}, {"block style", "in the block font style"}}},
    {{{"3D style", "which are 3D letters"}, {"flat style", "which sits flat"}}},
    {{{"sans-serif", "in the sans-serif style"}, {"serif", "in the serif style"}}},
    {{{"upright", "in the upright font style"}, {"slant", "in the slant font style"}}},
    {{{"rounded", "in the rounded font style"}, {"angular", "in the angular font style"}}},
}};

enum class Position {
  Top,
  Bottom,
  Left,
  Right,
  UpperLeftCorner,
  LowerLeftCorner,
  UpperRightCorner,
  LowerRightCorner,
  Center,
};

inline constexpr std::array<std::string_view, 9> kPositions = {
    "top",
    "bottom",
    "left",
    "right",
    "upper left corner",
    "lower left corner",
    "upper right corner",
    "lower right corner",
    "center"};

bool is_color(std::string_view value);
bool is_font(std::string_view value);
std::optional<Position> parse_position(std::string_view value);
std::string_view to_string(Position position);

// Index of the pair containing `font`, if any.
std::optional<std::size_t> font_pair_index(std::string_view font);
std::optional<std::string_view> font_partner(std::string_view font);
std::optional<std::string_view> font_description(std::string_view font);

// A per-word constraint on how text is rendered. `word_index` addresses the
// word list the condition is attached to.
struct AttributeCondition {
  std::size_t word_index = 0;
  AttributeKind kind = AttributeKind::Color;
  std::string value;

  friend bool operator==(const AttributeCondition&, const AttributeCondition&) = default;
};

// True when `value` belongs to the vocabulary of `kind`.
bool is_valid_condition_value(AttributeKind kind, std::string_view value);

}  // namespace lexeval
