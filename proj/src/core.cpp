#include "lexeval/core.hpp"

#include <algorithm>
#include <cmath>

#include "lexeval/errors.hpp"

namespace lexeval {

BBox clamp_to_image(const BBox& box, ImageSize image) {
  const double w = image.width;
  const double h = image.height;
  return {std::clamp(box.x0, 0.0, w), std::clamp(box.y0, 0.0, h),
          std::clamp(box.x1, 0.0, w), std::clamp(box.y1, 0.0, h)};
}

std::vector<std::string> OcrResult::texts() const {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.text);
  return out;
}

void validate(const GroundTruthText& gt, const std::string& context) {
  for (std::size_t i = 0; i < gt.words.size(); ++i) {
    if (gt.words[i].empty()) {
      throw DataError(context + ": ground-truth word " + std::to_string(i) + " is empty");
    }
  }
  for (const auto& c : gt.conditions) {
    if (c.word_index >= gt.words.size()) {
      throw DataError(context + ": condition word_index " + std::to_string(c.word_index) +
                      " out of range for " + std::to_string(gt.words.size()) + " words");
    }
    if (!is_valid_condition_value(c.kind, c.value)) {
      throw DataError(context + ": '" + c.value + "' is not a valid " +
                      std::string(to_string(c.kind)) + " condition");
    }
  }
}

void validate(const OcrResult& ocr, const std::string& context) {
  if (ocr.image.width <= 0 || ocr.image.height <= 0) {
    throw DataError(context + ": image dimensions must be positive");
  }
  for (const auto& w : ocr.words) {
    if (!w.bbox.is_proper()) {
      throw DataError(context + ": bbox of '" + w.text + "' requires x0 < x1 and y0 < y1");
    }
    if (!(w.confidence >= 0.0 && w.confidence <= 1.0)) {
      throw DataError(context + ": confidence of '" + w.text + "' outside [0, 1]");
    }
    if (w.bbox.x0 < 0 || w.bbox.y0 < 0 || w.bbox.x1 > ocr.image.width || w.bbox.y1 > ocr.image.height) {
      throw DataError(context + ": bbox of '" + w.text + "' exceeds the image");
    }
  }
}

std::optional<double> AttributeTally::score() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(satisfied) / static_cast<double>(total);
}

AttributeTally& AttributeTally::operator+=(const AttributeTally& other) {
  satisfied += other.satisfied;
  total += other.total;
  return *this;
}

AttributeTally& AttributeTallies::operator[](AttributeKind kind) {
  switch (kind) {
    case AttributeKind::Color: return color;
    case AttributeKind::Font: return font;
    case AttributeKind::Position: return position;
  }
  return color;
}

const AttributeTally& AttributeTallies::operator[](AttributeKind kind) const {
  return const_cast<AttributeTallies&>(*this)[kind];
}

AttributeTallies& AttributeTallies::operator+=(const AttributeTallies& other) {
  color += other.color;
  font += other.font;
  position += other.position;
  return *this;
}

}  // namespace lexeval
